"""A small expression language for vector/scalar identities over points.

Expressions are built from point variables (single uppercase letters),
signed-area atoms ``K[PQR]``, and rational literals, combined with ``+``,
``-``, ``*`` and parentheses.  An identity is two expressions joined by
``==`` (or ``=``).  The grammar:

    identity := expr ("==" | "=") expr
    expr     := term (("+" | "-") term)*
    term     := factor ("*" factor)* | "-" term
    factor   := "K[" letter letter letter "]" | literal | letter | "(" expr ")"

Whitespace is insignificant between tokens.  There is no division, so
both sides of any identity are polynomial in the point coordinates; that
is what makes the randomized verifier sound.

Typing is checked at parse time: point variables are vectors, area atoms
and literals are scalars, a product may contain at most one vector
factor, and sums never mix the two.  A bare literal ``0`` is polymorphic
so that vector identities can be written ``... == 0``.

Verification evaluates the identity exactly (rational arithmetic) at
pseudo-random integer assignments.  A nonzero residual at any sample
refutes the identity outright; agreement at all samples verifies it up to
the standard polynomial-identity-testing failure bound, at most
degree/(2*range + 1) per sample — negligible after the default 256
samples at range 10**6.  Sample i is drawn from its own counter-derived
generator, so reports are reproducible and independent of evaluation
order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Iterator, Optional, Union

from .geometry import Point2, Vec2, signed_area
from .scalar import Scalar, format_scalar

VECTOR = "vector"
SCALAR = "scalar"

DEFAULT_SAMPLES = 256
DEFAULT_RANGE = 10**6

JACOBI_IDENTITY_TEXT = "K[BCD]*A - K[ACD]*B + K[ABD]*C - K[ABC]*D == 0"
DECOMPOSITION_IDENTITY_TEXT = "K[BCD] + K[ABD] - K[ACD] - K[ABC] == 0"


class IdentitySyntaxError(ValueError):
    """Malformed identity text; carries the character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IdentityTypeError(ValueError):
    """Scalar/vector mismatch; carries the offending subterm's text."""

    def __init__(self, message: str, subterm: str):
        super().__init__(f"{message}: {subterm}")
        self.subterm = subterm


class MissingAssignmentError(ValueError):
    """Evaluation hit a point letter with no assigned coordinates."""

    def __init__(self, letter: str):
        super().__init__(f"no assignment for point {letter}")
        self.letter = letter


# --- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class PointVar:
    name: str  # single uppercase letter


@dataclass(frozen=True)
class AreaAtom:
    p: str
    q: str
    r: str  # repeated letters are legal; the area is then zero


@dataclass(frozen=True)
class Literal:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


Expr = Union[PointVar, AreaAtom, Literal, Neg, Add, Sub, Mul]


@dataclass(frozen=True)
class IdentityAst:
    kind: str  # VECTOR or SCALAR
    lhs: Expr
    rhs: Expr


def is_zero_literal(node: Expr) -> bool:
    return isinstance(node, Literal) and node.value == 0


# --- tokenizer ------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<karea>K\[)
      | (?P<number>\d+/\d+|\d+(?:\.\d+)?)
      | (?P<letter>[A-Z])
      | (?P<eq>==|=)
      | (?P<op>[+\-*\](\)])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise IdentitySyntaxError(
                f"unexpected character {text[pos]!r}", pos
            )
        kind = match.lastgroup
        if kind != "ws":
            token_text = match.group()
            if kind == "op":
                kind = token_text if token_text != "]" else "rbracket"
            tokens.append(_Token(kind, token_text, pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


# --- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            found = token.text or "end of input"
            raise IdentitySyntaxError(
                f"expected {what}, found {found!r}", token.position
            )
        return self.advance()

    def identity(self) -> IdentityAst:
        lhs = self.expr()
        self.expect("eq", "'==' or '='")
        rhs = self.expr()
        end = self.peek()
        if end.kind != "end":
            raise IdentitySyntaxError(
                f"trailing input {end.text!r}", end.position
            )
        return _typed_identity(lhs, rhs)

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.term()
            node = Add(node, right) if op.kind == "+" else Sub(node, right)
        return node

    def term(self) -> Expr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.term())
        node = self.factor()
        while self.peek().kind == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self) -> Expr:
        token = self.peek()
        if token.kind == "karea":
            self.advance()
            letters = [
                self.expect("letter", "a point letter").text
                for _ in range(3)
            ]
            self.expect("rbracket", "']'")
            return AreaAtom(*letters)
        if token.kind == "number":
            self.advance()
            return Literal(Fraction(token.text))
        if token.kind == "letter":
            self.advance()
            return PointVar(token.text)
        if token.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")", "')'")
            return node
        found = token.text or "end of input"
        raise IdentitySyntaxError(
            f"expected a factor, found {found!r}", token.position
        )


def _typed_identity(lhs: Expr, rhs: Expr) -> IdentityAst:
    # A bare zero literal takes the type of the opposite side.
    if is_zero_literal(lhs) and not is_zero_literal(rhs):
        kind = expr_type(rhs)
    elif is_zero_literal(rhs) and not is_zero_literal(lhs):
        kind = expr_type(lhs)
    else:
        lhs_type = expr_type(lhs)
        rhs_type = expr_type(rhs)
        if lhs_type != rhs_type:
            raise IdentityTypeError(
                f"sides have different types ({lhs_type} vs {rhs_type})",
                f"{print_expr(lhs)} == {print_expr(rhs)}",
            )
        kind = lhs_type
    return IdentityAst(kind, lhs, rhs)


def expr_type(node: Expr) -> str:
    """Infer scalar/vector type, rejecting mixes.

    Sums require both operands to share a type; a product admits at most
    one vector factor.
    """
    if isinstance(node, PointVar):
        return VECTOR
    if isinstance(node, (AreaAtom, Literal)):
        return SCALAR
    if isinstance(node, Neg):
        return expr_type(node.operand)
    if isinstance(node, (Add, Sub)):
        left = expr_type(node.left)
        right = expr_type(node.right)
        if left != right:
            raise IdentityTypeError(
                f"cannot combine {left} and {right} terms",
                print_expr(node),
            )
        return left
    if isinstance(node, Mul):
        left = expr_type(node.left)
        right = expr_type(node.right)
        if left == VECTOR and right == VECTOR:
            raise IdentityTypeError(
                "product of two vector factors", print_expr(node)
            )
        return VECTOR if VECTOR in (left, right) else SCALAR
    raise TypeError(f"not an expression node: {node!r}")


def parse_identity(text: str) -> IdentityAst:
    """Parse and type-check identity text.

    Raises IdentitySyntaxError or IdentityTypeError; never returns an
    ill-typed tree.
    """
    return _Parser(text).identity()


# --- printer --------------------------------------------------------------

_PREC_ADD = 0
_PREC_NEG = 1
_PREC_MUL = 2
_PREC_ATOM = 3


def _prec(node: Expr) -> int:
    if isinstance(node, (Add, Sub)):
        return _PREC_ADD
    if isinstance(node, Neg):
        return _PREC_NEG
    if isinstance(node, Mul):
        return _PREC_MUL
    if isinstance(node, Literal) and node.value < 0:
        # Literal tokens are unsigned in the grammar; a manually built
        # negative literal prints like a negation so the text reparses.
        return _PREC_NEG
    return _PREC_ATOM


def _fmt(node: Expr, minimum: int) -> str:
    if isinstance(node, PointVar):
        text = node.name
    elif isinstance(node, AreaAtom):
        text = f"K[{node.p}{node.q}{node.r}]"
    elif isinstance(node, Literal):
        text = format_scalar(node.value)
    elif isinstance(node, Neg):
        text = "-" + _fmt(node.operand, _PREC_NEG)
    elif isinstance(node, Add):
        text = _fmt(node.left, _PREC_ADD) + " + " + _fmt(node.right, _PREC_NEG)
    elif isinstance(node, Sub):
        text = _fmt(node.left, _PREC_ADD) + " - " + _fmt(node.right, _PREC_NEG)
    elif isinstance(node, Mul):
        text = _fmt(node.left, _PREC_MUL) + "*" + _fmt(node.right, _PREC_ATOM)
    else:
        raise TypeError(f"not an expression node: {node!r}")
    if _prec(node) < minimum:
        return "(" + text + ")"
    return text


def print_expr(node: Expr) -> str:
    return _fmt(node, _PREC_ADD)


def print_identity(ast: IdentityAst) -> str:
    """Canonical text; reparsing it reproduces the tree exactly."""
    return f"{print_expr(ast.lhs)} == {print_expr(ast.rhs)}"


# --- evaluator ------------------------------------------------------------


def point_letters(ast: IdentityAst) -> tuple[str, ...]:
    """All point letters the identity mentions, sorted."""
    letters: set[str] = set()

    def walk(node: Expr) -> None:
        if isinstance(node, PointVar):
            letters.add(node.name)
        elif isinstance(node, AreaAtom):
            letters.update((node.p, node.q, node.r))
        elif isinstance(node, Neg):
            walk(node.operand)
        elif isinstance(node, (Add, Sub, Mul)):
            walk(node.left)
            walk(node.right)

    walk(ast.lhs)
    walk(ast.rhs)
    return tuple(sorted(letters))


def _eval(node: Expr, env: dict[str, Point2]):
    if isinstance(node, PointVar):
        try:
            point = env[node.name]
        except KeyError:
            raise MissingAssignmentError(node.name) from None
        return point.position()
    if isinstance(node, AreaAtom):
        points = []
        for letter in (node.p, node.q, node.r):
            try:
                points.append(env[letter])
            except KeyError:
                raise MissingAssignmentError(letter) from None
        return signed_area(*points)
    if isinstance(node, Literal):
        return node.value
    if isinstance(node, Neg):
        return -_eval(node.operand, env)
    if isinstance(node, Add):
        return _eval(node.left, env) + _eval(node.right, env)
    if isinstance(node, Sub):
        return _eval(node.left, env) - _eval(node.right, env)
    if isinstance(node, Mul):
        left = _eval(node.left, env)
        right = _eval(node.right, env)
        if isinstance(right, Vec2):
            return left * right
        if isinstance(left, Vec2):
            return right * left
        return left * right
    raise TypeError(f"not an expression node: {node!r}")


def eval_identity(
    ast: IdentityAst, assignment: dict[str, Point2]
) -> Union[Vec2, Scalar]:
    """Residual lhs - rhs under the assignment.

    Vector identities yield a Vec2, scalar identities a scalar; exact
    inputs give an exact residual.
    """

    def side(node: Expr):
        if ast.kind == VECTOR and is_zero_literal(node):
            return Vec2(0, 0)
        return _eval(node, env=assignment)

    return side(ast.lhs) - side(ast.rhs)


def residual_is_zero(residual: Union[Vec2, Scalar]) -> bool:
    if isinstance(residual, Vec2):
        return residual.dx == 0 and residual.dy == 0
    return residual == 0


# --- randomized exact verification ----------------------------------------


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of randomized exact verification.

    A refutation carries the concrete assignment and its residual, which
    re-evaluates to the same nonzero value.
    """

    identity: str
    samples: int
    seed: int
    coordinate_range: int
    verified: bool
    counterexample: Optional[dict[str, Point2]] = None
    residual: Optional[Union[Vec2, Scalar]] = None

    def to_text(self) -> str:
        lines = [
            f"identity: {self.identity}",
            f"samples: {self.samples}",
            f"seed: {self.seed}",
            f"range: {self.coordinate_range}",
            f"result: {'verified' if self.verified else 'refuted'}",
        ]
        if not self.verified:
            assignment = "; ".join(
                f"{letter}=({format_scalar(p.x)}, {format_scalar(p.y)})"
                for letter, p in sorted(self.counterexample.items())
            )
            lines.append(f"counterexample: {assignment}")
            lines.append(f"residual: {_format_residual(self.residual)}")
        return "\n".join(lines) + "\n"


def _format_residual(residual: Union[Vec2, Scalar]) -> str:
    if isinstance(residual, Vec2):
        return f"({format_scalar(residual.dx)}, {format_scalar(residual.dy)})"
    return format_scalar(residual)


def _sample_assignments(
    letters: tuple[str, ...], samples: int, seed: int, bound: int
) -> Iterator[dict[str, Point2]]:
    # Counter-derived generators: sample i depends only on (seed, i), so
    # batches may be evaluated in any order without changing the report.
    for i in range(samples):
        rng = Random(f"{seed}:{i}")
        yield {
            letter: Point2(rng.randint(-bound, bound), rng.randint(-bound, bound))
            for letter in letters
        }


def verify_identity(
    ast: IdentityAst,
    samples: int = DEFAULT_SAMPLES,
    seed: int = 0,
    coordinate_range: int = DEFAULT_RANGE,
) -> VerifyReport:
    """Exact polynomial-identity test at random integer assignments.

    Verified means every sampled residual was exactly zero; Refuted
    reports the first counterexample in counter order.  Deterministic for
    a given (ast, samples, seed, coordinate_range).
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    if coordinate_range < 2:
        raise ValueError("coordinate_range must be at least 2")
    letters = point_letters(ast)
    identity_text = print_identity(ast)
    for assignment in _sample_assignments(
        letters, samples, seed, coordinate_range
    ):
        residual = eval_identity(ast, assignment)
        if not residual_is_zero(residual):
            return VerifyReport(
                identity=identity_text,
                samples=samples,
                seed=seed,
                coordinate_range=coordinate_range,
                verified=False,
                counterexample=assignment,
                residual=residual,
            )
    return VerifyReport(
        identity=identity_text,
        samples=samples,
        seed=seed,
        coordinate_range=coordinate_range,
        verified=True,
    )


# --- affine well-formedness -----------------------------------------------


def point_weight_expr(node: Expr) -> Expr:
    """Total formal weight of points in a vector expression, as a scalar
    expression (the coefficient sum, with area atoms left symbolic)."""
    if isinstance(node, PointVar):
        return Literal(Fraction(1))
    if isinstance(node, Literal):
        return Literal(Fraction(0))  # the polymorphic zero side
    if isinstance(node, Neg):
        return Neg(point_weight_expr(node.operand))
    if isinstance(node, Add):
        return Add(point_weight_expr(node.left), point_weight_expr(node.right))
    if isinstance(node, Sub):
        return Sub(point_weight_expr(node.left), point_weight_expr(node.right))
    if isinstance(node, Mul):
        if expr_type(node.left) == VECTOR:
            return Mul(node.right, point_weight_expr(node.left))
        return Mul(node.left, point_weight_expr(node.right))
    raise IdentityTypeError("not a vector expression", print_expr(node))


def affine_balanced(
    ast: IdentityAst, samples: int = 64, seed: int = 0,
    coordinate_range: int = DEFAULT_RANGE,
) -> bool:
    """Whether both sides carry the same total point weight.

    An unbalanced vector identity can only hold relative to a particular
    origin; the verifier still tests it as written (position vectors),
    so imbalance is reported as a warning, never an error.  Scalar
    identities are trivially balanced.
    """
    if ast.kind == SCALAR:
        return True
    weight_identity = IdentityAst(
        SCALAR,
        point_weight_expr(ast.lhs),
        point_weight_expr(ast.rhs),
    )
    report = verify_identity(
        weight_identity, samples=samples, seed=seed,
        coordinate_range=coordinate_range,
    )
    return report.verified
