"""
BCCKit - Exceções
Hierarquia de erros do pacote e códigos de saída da linha de comando
"""


class BccKitError(Exception):
    """Erro base do BCCKit"""

    exit_code = 1


class PropertyFailure(BccKitError):
    """Uma propriedade verificada pela suíte falhou"""

    exit_code = 1


class SchemaError(BccKitError, ValueError):
    """Entrada JSON ou expressão de construção inválida"""

    exit_code = 2


class GroundSetCapError(BccKitError, ValueError):
    """Conjunto base acima do limite de elementos"""

    exit_code = 3


class DomainPreconditionError(BccKitError, ValueError):
    """Pré-condição matemática de uma operação não satisfeita"""

    exit_code = 4


class UnknownElementError(DomainPreconditionError, KeyError):
    pass


class LoopError(DomainPreconditionError):
    """O matroide tem laços (o circuito quebrado de um laço é vazio)"""


class NotSimpleError(DomainPreconditionError):
    pass


class NotConnectedError(DomainPreconditionError):
    pass


class NonEssentialError(DomainPreconditionError):
    """Matriz de arranjo com posto menor que o número de linhas"""


class ConnectionSpecError(DomainPreconditionError):
    """Ponto base inválido para conexão em série / paralelo"""


class NotACircuitError(DomainPreconditionError):
    pass


class CohenMacaulayNotGrantedError(DomainPreconditionError):
    """O critério de Gorenstein só vale para complexos Cohen-Macaulay"""


class OrderSizeError(DomainPreconditionError):
    """Varredura exaustiva de ordens pedida para um conjunto base grande demais"""
