"""The small term grammar used by the CLI.

Prefix forms carry all operation structure, e.g.

    (* 1/3 (prec (prec (prec a b) b) b))
    (- (mul (mul x1 x2) x3) (mul x1 (mul x2 x3)))

and the printed normal forms are accepted back: "2[a b' b' b']" is a
scalar times a bracketed Zinbiel word, "x y'" a commutative monomial.
Infix +/- and coefficient juxtaposition exist only at the top level;
inside parentheses every argument is a single prefix expression.
"""

import re
from fractions import Fraction

from .lincomb import LinComb
from .terms import DiffVar, OpSignature, Term, parse_var

BINARY_OPS = ("mul", "prec", "succ", "lprod", "rprod", "nov")
UNARY_OPS = ("d", "dd")
LINEAR_OPS = ("+", "-", "*")

_TOKEN_RE = re.compile(
    r"""(?P<ws>\s+)
      | (?P<num>\d+(?:/\d+)?)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_]*(?:'+|\^\(\d+(?:,\d+)?\))?)
      | (?P<punct>[()\[\]+\-*])
    """,
    re.VERBOSE,
)


class ParseError(ValueError):
    def __init__(self, message, line=None, col=None, token=None):
        self.line, self.col, self.token = line, col, token
        where = f" at line {line}, column {col}" if line is not None else ""
        tok = f" near {token!r}" if token else ""
        super().__init__(f"{message}{where}{tok}")


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind, self.value, self.line, self.col = kind, value, line, col


def tokenize(src: str):
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if not m:
            raise ParseError("unexpected character", line, col, src[pos])
        text = m.group(0)
        if m.lastgroup == "num":
            try:
                value = Fraction(text)
            except ZeroDivisionError:
                raise ParseError("zero denominator", line, col, text) from None
            tokens.append(_Token("num", value, line, col))
        elif m.lastgroup == "ident":
            tokens.append(_Token("ident", text, line, col))
        elif m.lastgroup == "punct":
            tokens.append(_Token(text, text, line, col))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = m.end()
    tokens.append(_Token("eof", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}", tok.line, tok.col, tok.value)
        return tok

    def parse_expression(self):
        """Top-level: signed terms joined by + and -."""
        terms = []
        sign = 1
        tok = self.peek()
        if tok.kind == "-":
            self.next()
            sign = -1
        elif tok.kind == "+":
            self.next()
        terms.append(self.parse_signed_term(sign))
        while self.peek().kind in ("+", "-"):
            sign = 1 if self.next().kind == "+" else -1
            terms.append(self.parse_signed_term(sign))
        if len(terms) == 1:
            return terms[0]
        return ("+", terms, None)

    def parse_signed_term(self, sign):
        term = self.parse_juxt_term()
        if sign == -1:
            return ("-", [term], None)
        return term

    def parse_juxt_term(self):
        tok = self.peek()
        coeff = None
        if tok.kind == "num":
            self.next()
            coeff = ("num", tok.value, (tok.line, tok.col))
        factors = []
        while self.peek().kind in ("(", "[", "ident", "num"):
            factors.append(self.parse_factor())
        if not factors:
            if coeff is not None:
                return coeff
            tok = self.peek()
            raise ParseError("expected a term", tok.line, tok.col, tok.value)
        body = factors[0] if len(factors) == 1 else ("juxt", factors, None)
        if coeff is not None:
            return ("*", [coeff, body], None)
        return body

    def parse_factor(self):
        tok = self.next()
        if tok.kind == "ident":
            try:
                v = parse_var(tok.value)
            except ValueError:
                raise ParseError("bad variable", tok.line, tok.col, tok.value) from None
            return ("var", v, (tok.line, tok.col))
        if tok.kind == "num":
            return ("num", tok.value, (tok.line, tok.col))
        if tok.kind == "[":
            letters = []
            while self.peek().kind == "ident":
                letters.append(parse_var(self.next().value))
            end = self.expect("]")
            if not letters:
                raise ParseError("empty bracket word", end.line, end.col, "]")
            return ("zw", letters, (tok.line, tok.col))
        if tok.kind == "(":
            head = self.next()
            name = head.value if head.kind in ("ident",) else head.kind
            if head.kind == "num" or name not in BINARY_OPS + UNARY_OPS + LINEAR_OPS:
                raise ParseError("unknown operation", head.line, head.col, head.value)
            args = []
            while self.peek().kind != ")":
                if self.peek().kind == "eof":
                    raise ParseError("unclosed '('", tok.line, tok.col, "(")
                args.append(self.parse_factor())
            self.next()
            return (name, args, (head.line, head.col))
        raise ParseError("unexpected token", tok.line, tok.col, tok.value)


def parse(src: str):
    parser = _Parser(tokenize(src))
    ast = parser.parse_expression()
    tail = parser.peek()
    if tail.kind != "eof":
        raise ParseError("trailing input", tail.line, tail.col, tail.value)
    return ast


def _pos(ast):
    return ast[2] or (None, None)


def _arity_error(name, args, ast, want):
    line, col = _pos(ast)
    raise ParseError(f"{name} takes {want} arguments, got {len(args)}", line, col, name)


def _as_var(ast, bumps=0, bumps2=0) -> DiffVar:
    kind, payload, _ = ast
    if kind == "var":
        v = payload
        for _ in range(bumps):
            v = v.d()
        for _ in range(bumps2):
            v = v.dd()
        return v
    if kind == "d":
        return _as_var(payload[0], bumps + 1, bumps2)
    if kind == "dd":
        return _as_var(payload[0], bumps, bumps2 + 1)
    line, col = _pos(ast)
    raise ParseError("d/dd applies to a variable in term input", line, col, kind)


def build_term(ast, signature: OpSignature) -> LinComb:
    """Turn an AST into a linear combination of Terms over the signature."""
    kind, payload, pos = ast
    if kind == "var":
        return LinComb.single(Term.leaf(payload))
    if kind == "num":
        line, col = _pos(ast)
        raise ParseError("a bare scalar is not a term", line, col, str(payload))
    if kind == "zw":
        if "mul" not in signature:
            line, col = _pos(ast)
            raise ParseError("bracket words need the 'mul' signature", line, col, "[")
        term = Term.leaf(payload[-1])
        for v in reversed(payload[:-1]):
            term = Term.node("mul", Term.leaf(v), term)
        return LinComb.single(term)
    if kind == "juxt":
        if len(payload) == 1:
            return build_term(payload[0], signature)
        line, col = _pos(ast)
        raise ParseError(
            "juxtaposition is ambiguous for nonassociative terms; use explicit operations",
            line,
            col,
        )
    if kind == "+":
        out = LinComb.zero()
        for arg in payload:
            out = out + build_term(arg, signature)
        return out
    if kind == "-":
        if len(payload) == 1:
            return -build_term(payload[0], signature)
        out = build_term(payload[0], signature)
        for arg in payload[1:]:
            out = out - build_term(arg, signature)
        return out
    if kind == "*":
        scalars = [a for a in payload if a[0] == "num"]
        bodies = [a for a in payload if a[0] != "num"]
        if len(bodies) != 1:
            _arity_error("*", bodies, ast, "scalars and exactly one term")
        coeff = Fraction(1)
        for s in scalars:
            coeff *= s[1]
        return build_term(bodies[0], signature) * coeff
    if kind in UNARY_OPS:
        if len(payload) != 1:
            _arity_error(kind, payload, ast, 1)
        return LinComb.single(Term.leaf(_as_var(ast)))
    if kind in BINARY_OPS:
        if kind not in signature:
            line, col = _pos(ast)
            raise ParseError(
                f"operation {kind!r} not in signature {list(signature.ops)}", line, col, kind
            )
        if len(payload) != 2:
            _arity_error(kind, payload, ast, 2)
        left = build_term(payload[0], signature)
        right = build_term(payload[1], signature)
        out = LinComb.zero()
        for tl, cl in left.items():
            for tr, cr in right.items():
                out = out + LinComb.single(Term.node(kind, tl, tr), cl * cr)
        return out
    line, col = _pos(ast)
    raise ParseError(f"cannot use {kind!r} here", line, col, kind)


def parse_term(src: str, signature: OpSignature) -> LinComb:
    return build_term(parse(src), signature)


def evaluate(ast, engine) -> LinComb:
    """Evaluate an AST in a free differential algebra engine (an object
    with .leaf, .ops and .unary, see operads.ENGINES)."""
    kind, payload, pos = ast
    if kind == "num":
        line, col = _pos(ast)
        raise ParseError("a bare scalar is not an algebra element", line, col, str(payload))
    if kind == "var":
        return engine.leaf(payload)
    if kind == "zw":
        out = engine.leaf(payload[-1])
        for v in reversed(payload[:-1]):
            out = engine.ops["mul"](engine.leaf(v), out)
        return out
    if kind == "juxt":
        out = evaluate(payload[0], engine)
        for arg in payload[1:]:
            out = engine.ops["mul"](out, evaluate(arg, engine))
        return out
    if kind == "+":
        out = LinComb.zero()
        for arg in payload:
            out = out + evaluate(arg, engine)
        return out
    if kind == "-":
        if len(payload) == 1:
            return -evaluate(payload[0], engine)
        out = evaluate(payload[0], engine)
        for arg in payload[1:]:
            out = out - evaluate(arg, engine)
        return out
    if kind == "*":
        scalars = [a for a in payload if a[0] == "num"]
        bodies = [a for a in payload if a[0] != "num"]
        if len(bodies) != 1:
            _arity_error("*", bodies, ast, "scalars and exactly one element")
        coeff = Fraction(1)
        for s in scalars:
            coeff *= s[1]
        return evaluate(bodies[0], engine) * coeff
    if kind in UNARY_OPS:
        if len(payload) != 1:
            _arity_error(kind, payload, ast, 1)
        fn = engine.unary.get(kind)
        if fn is None:
            line, col = _pos(ast)
            raise ParseError(f"variety {engine.name!r} has no operation {kind!r}", line, col, kind)
        return fn(evaluate(payload[0], engine))
    if kind in BINARY_OPS:
        fn = engine.ops.get(kind)
        if fn is None:
            line, col = _pos(ast)
            raise ParseError(f"variety {engine.name!r} has no operation {kind!r}", line, col, kind)
        if len(payload) != 2:
            _arity_error(kind, payload, ast, 2)
        return fn(evaluate(payload[0], engine), evaluate(payload[1], engine))
    line, col = _pos(ast)
    raise ParseError(f"cannot evaluate {kind!r}", line, col, kind)


def evaluate_source(src: str, engine) -> LinComb:
    return evaluate(parse(src), engine)
