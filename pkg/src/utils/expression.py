"""
BCCKit - Expressões de Construção
Parser descendente recursivo para U(m,n), G(arquivo), sum(X,Y), P(X,Y;e) e S(X,Y;e)
"""

import logging
import re
from typing import Optional

from ..exceptions import SchemaError
from ..models.constructions import glue
from ..models.matroid import Matroid, uniform
from .data_loader import DataLoader

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(sum|U|G|P|S|\d+|[(),;])")


class ExpressionParser:
    """
    Avalia uma expressão de construção em um matroide

    Folhas usam rótulos 1..n. Em cada colagem o operando direito é
    renomeado para depois do maior rótulo do esquerdo; em P/S o menor
    rótulo do operando direito vira o ponto base e.
    """

    def __init__(self, text: str, loader: Optional[DataLoader] = None):
        self.text = text
        self.pos = 0
        self.loader = loader or DataLoader()

    def parse(self) -> Matroid:
        matroid = self._expr()
        self._skip_spaces()
        if self.pos != len(self.text):
            self._fail(f"texto inesperado {self.text[self.pos:]!r}")
        return matroid

    # ------------------------------------------------------------------
    def _fail(self, message: str):
        raise SchemaError(f"Expressão inválida na posição {self.pos}: {message}")

    def _skip_spaces(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _next(self) -> str:
        match = _TOKEN.match(self.text, self.pos)
        if not match:
            self._fail(f"token desconhecido em {self.text[self.pos:]!r}")
        self.pos = match.end()
        return match.group(1)

    def _expect(self, token: str):
        found = self._next()
        if found != token:
            self._fail(f"esperado {token!r}, encontrado {found!r}")

    def _int(self) -> int:
        token = self._next()
        if not token.isdigit():
            self._fail(f"esperado inteiro, encontrado {token!r}")
        return int(token)

    def _path(self) -> str:
        self._skip_spaces()
        end = self.text.find(')', self.pos)
        if end < 0:
            self._fail("G( sem ')'")
        path = self.text[self.pos:end].strip()
        self.pos = end
        if not path:
            self._fail("caminho vazio em G()")
        return path

    def _expr(self) -> Matroid:
        head = self._next()
        self._expect('(')
        if head == 'U':
            m = self._int()
            self._expect(',')
            n = self._int()
            self._expect(')')
            return uniform(m, n, range(1, n + 1))
        if head == 'G':
            loaded = self.loader.load_matroid(self._path())
            self._expect(')')
            return loaded.relabel({e: i + 1 for i, e in enumerate(loaded.ground)})
        if head in ('sum', 'P', 'S'):
            left = self._expr()
            self._expect(',')
            right = self._expr()
            basepoint = None
            if head != 'sum':
                self._expect(';')
                basepoint = self._int()
            self._expect(')')
            return glue(head, left, right, basepoint)
        self._fail(f"construção desconhecida {head!r}")


def parse_expression(text: str, loader: Optional[DataLoader] = None) -> Matroid:
    """
    Constrói o matroide descrito por uma expressão

    Args:
        text: por exemplo "P(U(2,3),U(2,3);3)"
        loader: DataLoader usado por G(arquivo)

    Returns:
        Matroid resultante
    """
    matroid = ExpressionParser(text, loader).parse()
    logger.debug(f"Expressão {text!r}: {len(matroid.ground)} elementos, posto {matroid.full_rank}")
    return matroid
