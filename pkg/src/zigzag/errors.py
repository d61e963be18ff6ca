class ZigzagError(Exception):
    pass


class InputError(ZigzagError, ValueError):
    """Malformed or mismatched input (bad file, wrong ground set, bad element)."""


class ParseError(InputError):
    def __init__(self, message, lineno=None, path=None):
        self.lineno = lineno
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class AxiomError(ZigzagError):
    """A precondition axiom (Z1, Z2, Z3, left cancellativity, ...) does not hold."""

    def __init__(self, axiom, message=None, witness=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"{axiom} fails")


class SizeCapError(ZigzagError):
    def __init__(self, cap, count):
        self.cap = cap
        self.count = count
        super().__init__(f"closure exceeded size cap {cap} (reached {count} elements)")
