"""
Gerador do Corpus Padrão do BCCKit
Grava a especificação do corpus, as contagens douradas da enumeração de grafos
e exemplos de entrada para a linha de comando
"""

import pandas as pd

from src.config import get_settings
from src.models.orlik_terao import generic_arrangement, graphic_arrangement
from src.utils.corpus import (CorpusSpec, GraphFamily, OrderBudget, ParallelUmFamily, SpRandomFamily,
                              UniformFamily, build_corpus, gen_graphic, golden_key,
                              write_golden_counts)
from src.utils.data_loader import DataLoader, matroid_to_dict
from src.utils.expression import parse_expression

settings = get_settings()
seed = settings.resolve_seed(20240601)
loader = DataLoader(settings.data_path)

# Especificação padrão
spec = CorpusSpec(
    graphs=GraphFamily(max_vertices=5, max_edges=8),
    uniform=UniformFamily(max_n=6),
    sp_random=SpRandomFamily(count=20, max_size=10, seed=seed),
    parallel_um=ParallelUmFamily(count=10, max_blocks=3, seed=seed),
    order_budget=OrderBudget(exhaustive_below=7, samples=20, max_sampled=10),
)
path = loader.save_json(spec.to_dict(), 'corpus/default_corpus.json')
print(f"✅ Corpus padrão salvo em: {path} (semente {seed})")

# Contagens douradas de grafos conexos simples
counts = {golden_key(v, e): sum(1 for _ in gen_graphic(v, e)) for v, e in [(3, 3), (4, 6), (5, 8)]}
write_golden_counts(f"{settings.data_path}/golden/enumeration_counts.json", counts)
for key, value in counts.items():
    print(f"🔢 {key}: {value}")

# Exemplos para a linha de comando
examples = {
    'examples/parallel_u23_u23.json': matroid_to_dict(parse_expression('P(U(2,3),U(2,3);3)')),
    'examples/graphic_c4_matrix.json': graphic_arrangement([(0, 1), (1, 2), (2, 3), (3, 0)]).to_dict(),
    'examples/generic_3x5.json': generic_arrangement(3, 5).to_dict(),
}
for name, data in examples.items():
    loader.save_json(data, name)
print(f"💾 {len(examples)} exemplos gravados em {settings.data_path}/examples")

# Resumo do corpus
instances = build_corpus(spec)
df = pd.DataFrame([
    {'família': i.family, 'elementos': len(i.matroid.ground), 'posto': i.matroid.full_rank}
    for i in instances
])
resumo = df.groupby('família').agg(instâncias=('elementos', 'size'),
                                   máx_elementos=('elementos', 'max'),
                                   máx_posto=('posto', 'max')).reset_index()
print("\n📊 Resumo do corpus:")
print(resumo.to_string(index=False))
print(f"Total de instâncias: {len(instances)}")
