"""Fractions rationnelles exactes en p et θ_1, ..., θ_{2n}."""
import sympy

from core.exceptions import IntertwiningError
from hecke.satake import P


class RatFunc:
    """Quotient de polynômes à coefficients entiers, gardé sous forme sympy.cancel."""

    __slots__ = ('expr',)

    def __init__(self, expr):
        expr = sympy.cancel(sympy.together(sympy.sympify(expr)))
        _, denominateur = sympy.fraction(expr)
        if denominateur == 0:
            raise IntertwiningError("Dénominateur nul")
        self.expr = expr

    @classmethod
    def of(cls, valeur):
        return valeur if isinstance(valeur, cls) else cls(valeur)

    def __add__(self, autre):
        return RatFunc(self.expr + RatFunc.of(autre).expr)

    __radd__ = __add__

    def __sub__(self, autre):
        return RatFunc(self.expr - RatFunc.of(autre).expr)

    def __rsub__(self, autre):
        return RatFunc(RatFunc.of(autre).expr - self.expr)

    def __mul__(self, autre):
        return RatFunc(self.expr * RatFunc.of(autre).expr)

    __rmul__ = __mul__

    def __truediv__(self, autre):
        autre = RatFunc.of(autre)
        if autre.is_zero():
            raise IntertwiningError("Division par la fraction nulle")
        return RatFunc(self.expr / autre.expr)

    def __neg__(self):
        return RatFunc(-self.expr)

    def is_zero(self):
        return sympy.cancel(self.expr) == 0

    def __eq__(self, autre):
        try:
            autre = RatFunc.of(autre)
        except (sympy.SympifyError, TypeError):
            return NotImplemented
        return sympy.cancel(self.expr - autre.expr) == 0

    def __hash__(self):
        return hash(sympy.srepr(self.expr))

    def numerator(self):
        return sympy.fraction(self.expr)[0]

    def denominator(self):
        return sympy.fraction(self.expr)[1]

    def subs(self, substitutions):
        """Spécialise ; une spécialisation qui annule le dénominateur est refusée."""
        denominateur = sympy.cancel(self.denominator().subs(substitutions))
        if denominateur == 0:
            raise IntertwiningError(f"La spécialisation {substitutions} est un pôle de {self}")
        return RatFunc(self.expr.subs(substitutions))

    def p_power_exponent(self):
        """Exposant e si la fraction vaut p^e, sinon None."""
        base, exposant = self.expr.as_base_exp()
        if self.expr == 1:
            return 0
        if base == P and exposant.is_Integer:
            return int(exposant)
        return None

    def format(self):
        return sympy.sstr(self.expr)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.format()})"


ZERO = RatFunc(0)
ONE = RatFunc(1)
