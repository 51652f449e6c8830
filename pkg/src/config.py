"""
BCCKit - Configuração
Carrega as configurações do ambiente (arquivo .env opcional)
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Configurações de execução"""

    seed: Optional[int]
    jobs: int
    log_level: str
    data_path: str

    def resolve_seed(self, default: int) -> int:
        """Semente efetiva: BCCKIT_SEED tem prioridade sobre a do corpus"""
        return default if self.seed is None else self.seed


def _int_or_none(raw: Optional[str]) -> Optional[int]:
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Valor inteiro inválido ignorado: {raw!r}")
        return None


def get_settings() -> Settings:
    """
    Lê as variáveis BCCKIT_* do ambiente

    Returns:
        Settings com os valores atuais
    """
    jobs = _int_or_none(os.getenv('BCCKIT_JOBS')) or os.cpu_count() or 1
    return Settings(
        seed=_int_or_none(os.getenv('BCCKIT_SEED')),
        jobs=max(1, jobs),
        log_level=os.getenv('BCCKIT_LOG_LEVEL', 'INFO').upper(),
        data_path=os.getenv('BCCKIT_DATA_PATH', 'data'),
    )
