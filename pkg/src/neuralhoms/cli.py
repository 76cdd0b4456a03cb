"""Command line front end.

Exit codes: 0 success, 2 parse error, 3 resource bound exceeded,
4 semantic or validation error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .codes import Flip, Permute, Restrict, parse_permutation, transform_code, word_to_str
from .errors import (
    AmbientMismatch,
    AmbientTooLarge,
    BadParameters,
    HomValidationError,
    NeuralError,
    ParseError,
)
from .homs import (
    format_decomposition,
    hom_apply_code,
    hom_apply_generators,
    hom_compose,
    hom_decompose,
)
from .ideals import (
    CF_MAX_N,
    canonical_form,
    code_of_generators,
    ideal_of_code,
    membership_certificate,
    nonmember_witness,
)
from .pseudo import ZERO
from .realize import IntervalCover, cover_code, interval_code, is_convex_1d, realize_transform

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_SEMANTIC = 0, 2, 3, 4


class CommandError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}", EXIT_PARSE) from exc


def _pm_tsv(f) -> str:
    sig = ",".join(map(str, f.sigma_indices)) or "-"
    tau = ",".join(map(str, f.tau_indices)) or "-"
    return f"{sig}\t{tau}"


def _pm_out(f, fmt: str) -> str:
    return _pm_tsv(f) if fmt == "tsv" else str(f)


def load_code(path: str, n: int | None, err):
    code, dups = formats.parse_code_text(_read(path), default_n=n)
    if n is not None and code.n != n:
        raise AmbientMismatch(f"{path}: codewords have {code.n} bits but --n {n} was given")
    for lineno, word in dups:
        print(f"warning: {path}: line {lineno}: duplicate codeword {word} ignored", file=err)
    return code


def _descriptor(args):
    if args.permute is not None:
        return Permute(parse_permutation(args.permute))
    if args.flip is not None:
        return Flip(args.flip)
    if args.restrict is not None:
        return Restrict(*args.restrict)
    raise BadParameters("give one of --permute, --flip, --restrict")


def cmd_cf(args, out, err):
    code = load_code(args.codefile, args.n, err)
    cf = canonical_form(ideal_of_code(code), max_n=args.max_n)
    for f in cf:
        print(_pm_out(f, args.format), file=out)


def cmd_gens(args, out, err):
    code = load_code(args.codefile, args.n, err)
    G = ideal_of_code(code).generator_set()
    if args.format == "tsv":
        for g in G:
            print(_pm_tsv(g), file=out)
    else:
        out.write(formats.format_generators(G))


def cmd_code_of_gens(args, out, err):
    G = formats.parse_generator_text(_read(args.genfile))
    out.write(formats.format_code(code_of_generators(G)))


def cmd_hom_check(args, out, err):
    try:
        formats.parse_hom_text(_read(args.homfile))
    except HomValidationError as exc:
        print(f"{exc.label} {exc}", file=out)
        return EXIT_SEMANTIC
    print("VALID", file=out)


def _is_generator_file(text: str) -> bool:
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            return s.replace(" ", "").startswith("n=")
    return False


def cmd_hom_apply(args, out, err):
    phi = formats.parse_hom_text(_read(args.homfile))
    text = _read(args.target)
    if _is_generator_file(text):
        G = formats.parse_generator_text(text)
        if G.n != phi.n:
            raise AmbientMismatch(f"generators live in n={G.n}, map has n={phi.n}")
        seen = set()
        for g, img in zip(G, hom_apply_generators(phi, G)):
            if img is ZERO:
                print(f"zero image: {g} -> 0 (dropped)", file=err)
            elif img not in seen:
                seen.add(img)
                print(_pm_out(img, args.format), file=out)
    else:
        code = load_code(args.target, args.n, err)
        out.write(formats.format_code(hom_apply_code(phi, code)))


def cmd_hom_decompose(args, out, err):
    phi = formats.parse_hom_text(_read(args.homfile))
    d = hom_decompose(phi)
    if args.format == "tsv":
        print("delta\t" + (",".join(map(str, sorted(d.flips))) or "-"), file=out)
        for i in sorted(range(1, d.n + 1), key=d.perm):
            print(f"lambda\t{i}\t{d.perm(i)}", file=out)
        print(f"omega\t{d.restr[0]}\t{d.restr[1]}", file=out)
    else:
        out.write(format_decomposition(d))
    if args.emit_parts:
        target = Path(args.emit_parts)
        target.mkdir(parents=True, exist_ok=True)
        for name, part in (("delta", d.delta()), ("lambda", d.lam()), ("omega", d.omega())):
            (target / f"{name}.hom").write_text(formats.format_hom(part), encoding="utf-8")


def cmd_hom_compose(args, out, err):
    homs = [formats.parse_hom_text(_read(p)) for p in args.homfiles]
    phi = homs[0]
    for nxt in homs[1:]:
        phi = hom_compose(nxt, phi)
    text = formats.format_hom(phi)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)


def cmd_code_transform(args, out, err):
    code = load_code(args.codefile, args.n, err)
    out.write(formats.format_code(transform_code(code, _descriptor(args))))


def _load_realization(path: str):
    return formats.parse_realization_text(_read(path))


def _realization_code(U):
    return interval_code(U) if isinstance(U, IntervalCover) else cover_code(U)


def cmd_realize_code(args, out, err):
    out.write(formats.format_code(_realization_code(_load_realization(args.file))))


def _require_intervals(U, action: str):
    if not isinstance(U, IntervalCover):
        raise BadParameters(f"{action} needs an interval-form realization")


def cmd_realize_transform(args, out, err):
    U = _load_realization(args.file)
    if args.check_convex:
        _require_intervals(U, "--check-convex")
    V = realize_transform(U, _descriptor(args))
    if args.output:
        Path(args.output).write_text(formats.format_realization(V), encoding="utf-8")
    out.write(formats.format_code(_realization_code(V)))
    if args.check_convex:
        print("CONVEX" if is_convex_1d(V) else "NONCONVEX", file=out)


def cmd_realize_convexity(args, out, err):
    U = _load_realization(args.file)
    _require_intervals(U, "convexity")
    print("CONVEX" if is_convex_1d(U) else "NONCONVEX", file=out)


def cmd_member(args, out, err):
    code = load_code(args.codefile, args.n, err)
    f = formats.parse_pm_text(_read(args.pmfile), code.n)
    J = ideal_of_code(code)
    witness = nonmember_witness(J, f)
    tsv = args.format == "tsv"
    if witness is not None:
        word = word_to_str(witness, code.n)
        print(f"NOT MEMBER\t{word}" if tsv else f"NOT MEMBER\nwitness {word}", file=out)
        return
    print("MEMBER", file=out)
    if args.certificate:
        cert = membership_certificate(J, f)
        if tsv:
            for _, gen in cert.terms:
                print(_pm_tsv(gen), file=out)
        else:
            print(cert, file=out)


def _add_descriptor(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--permute", metavar="IMAGES", help='images of 1..n, e.g. "2 3 1"')
    g.add_argument("--flip", type=int, metavar="I")
    g.add_argument("--restrict", type=int, nargs=2, metavar=("M", "MP"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None, help="bit count when a code file is empty")
    common.add_argument("--max-n", type=int, default=CF_MAX_N, help="canonical-form enumeration bound")
    common.add_argument("--format", choices=("text", "tsv"), default="text")

    parser = argparse.ArgumentParser(
        prog="neuralhoms",
        description="Neural codes, neural ideals and the homomorphisms preserving them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", parents=[common], help="canonical form of a code's neural ideal")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("gens", parents=[common], help="indicator generators of a code's neural ideal")
    p.add_argument("codefile")
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("code-of-gens", parents=[common], help="code of a pseudomonomial generator file")
    p.add_argument("genfile")
    p.set_defaults(func=cmd_code_of_gens)

    hom = sub.add_parser("hom", help="neural-ideal-preserving homomorphisms")
    hsub = hom.add_subparsers(dest="action", required=True)
    p = hsub.add_parser("check", parents=[common])
    p.add_argument("homfile")
    p.set_defaults(func=cmd_hom_check)
    p = hsub.add_parser("apply", parents=[common], help="apply to a generator file or a code file")
    p.add_argument("homfile")
    p.add_argument("target")
    p.set_defaults(func=cmd_hom_apply)
    p = hsub.add_parser("decompose", parents=[common])
    p.add_argument("homfile")
    p.add_argument("--emit-parts", metavar="DIR", help="also write delta.hom, lambda.hom, omega.hom")
    p.set_defaults(func=cmd_hom_decompose)
    p = hsub.add_parser("compose", parents=[common], help="compose maps; the first file is applied first")
    p.add_argument("homfiles", nargs="+")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_hom_compose)

    code = sub.add_parser("code", help="code transformations")
    csub = code.add_subparsers(dest="action", required=True)
    p = csub.add_parser("transform", parents=[common])
    p.add_argument("codefile")
    _add_descriptor(p)
    p.set_defaults(func=cmd_code_transform)

    real = sub.add_parser("realize", help="finite realizations")
    rsub = real.add_subparsers(dest="action", required=True)
    p = rsub.add_parser("code", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_realize_code)
    p = rsub.add_parser("transform", parents=[common])
    p.add_argument("file")
    _add_descriptor(p)
    p.add_argument("-o", "--output", help="write the transformed realization here")
    p.add_argument("--check-convex", action="store_true")
    p.set_defaults(func=cmd_realize_transform)
    p = rsub.add_parser("convexity", parents=[common])
    p.add_argument("file")
    p.set_defaults(func=cmd_realize_convexity)

    p = sub.add_parser("member", parents=[common], help="pseudomonomial membership in a neural ideal")
    p.add_argument("pmfile")
    p.add_argument("codefile")
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_member)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        rc = args.func(args, out, err)
    except CommandError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_PARSE
    except AmbientTooLarge as exc:
        print(f"resource bound: {exc}", file=err)
        return EXIT_RESOURCE
    except HomValidationError as exc:
        print(f"invalid map: {exc.label} {exc}", file=err)
        return EXIT_SEMANTIC
    except NeuralError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SEMANTIC
    return EXIT_OK if rc is None else rc


if __name__ == "__main__":
    sys.exit(main())
