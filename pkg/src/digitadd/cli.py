"""Command line front end.

Exit codes: 0 success, 1 domain error (bad scheme, digits, key, cap), 2
usage error (argparse).  All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import cipher, combinatorics, verify
from .digits import as_base, format_digits, parse_digits
from .errors import DigitAddError
from .schemes import DEFAULT_TABLE_CAP, operation_table, scheme_add, scheme_parse, scheme_solve


def _scheme_and_vectors(args, *names):
    s = scheme_parse(args.scheme)
    vectors = [parse_digits(getattr(args, n), s.base, s.m) for n in names]
    return s, vectors


def cmd_add(args, out):
    s, (x, y) = _scheme_and_vectors(args, "x", "y")
    out.write(format_digits(scheme_add(s, x, y)) + "\n")


def cmd_solve(args, out):
    s, (z, y) = _scheme_and_vectors(args, "z", "y")
    out.write(format_digits(scheme_solve(s, z, y)) + "\n")


def cmd_table(args, out):
    table = operation_table(scheme_parse(args.scheme), args.cap)
    for row in table.tolist():
        out.write(" ".join(map(str, row)) + "\n")


def cmd_verify(args, out):
    s = scheme_parse(args.scheme)
    out.write(verify.format_axiom_report(s, verify.check_group_axioms(s, args.cap)))


def cmd_count(args, out):
    base = as_base(args.base)
    if args.compositions:
        n = combinatorics.count_compositions(args.m)
    elif args.partitions:
        n = combinatorics.count_partitions(args.m)
    else:
        n = combinatorics.count_additions_general(base, args.m)
    out.write(f"{n}\n")


def cmd_census(args, out):
    report = verify.census_distinct_tables(args.base, args.m, args.twists, cap=args.cap)
    out.write(report.to_text())


def cmd_classify(args, out):
    out.write(verify.classify_all(args.base, args.m, profile_cap=args.profile_cap).to_text())


def _derive(args) -> cipher.SchemeDerivation:
    try:
        key = bytes.fromhex(args.key)
    except ValueError:
        raise DigitAddError(f"key {args.key!r} is not a hex string") from None
    return cipher.derive_scheme_from_key(cipher.KeySpec(key, args.base, args.m))


def cmd_derive(args, out):
    d = _derive(args)
    out.write(d.transcript_text() if args.transcript else str(d.scheme) + "\n")


def _read_stream(path: str, base, raw: bool) -> list[int]:
    if raw:
        return cipher.bytes_to_digits(Path(path).read_bytes())
    text = "".join(Path(path).read_text().split())
    if not text:
        return []
    return list(parse_digits(text, base))


def _crypt(args, out, encrypt: bool):
    d = _derive(args)
    if args.raw and (d.scheme.base.b != 2 or d.scheme.m != 8):
        raise DigitAddError("--raw needs base 2 and block length 8")
    data = _read_stream(args.input, d.scheme.base, args.raw)
    keystream = _read_stream(args.keystream, d.scheme.base, args.raw)
    fn = cipher.encrypt_stream if encrypt else cipher.decrypt_stream
    result = fn(d, data, keystream)
    if args.raw:
        payload = cipher.digits_to_bytes(result)
        if args.output:
            Path(args.output).write_bytes(payload)
        else:
            sys.stdout.buffer.write(payload)
        return
    text = format_digits(result) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)


def cmd_encrypt(args, out):
    _crypt(args, out, True)


def cmd_decrypt(args, out):
    _crypt(args, out, False)


def cmd_list_compositions(args, out):
    for comp in combinatorics.enumerate_compositions(args.m):
        out.write(f"{comp}\n")


def cmd_list_units(args, out):
    units = combinatorics.enumerate_twist_units(args.base, args.t)
    out.write(" ".join(map(str, units)) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="digitadd",
        description="Carry/carryless additions on base-b digit vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def scheme_cmd(name, fn, help_, *operands, cap=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("scheme", help='e.g. "b=2 comp=3,2,1,1,1 twist=3,1,1,1,1"')
        for operand in operands:
            p.add_argument(operand)
        if cap:
            p.add_argument("--cap", type=int, default=DEFAULT_TABLE_CAP, help="max table elements")
        p.set_defaults(func=fn)
        return p

    scheme_cmd("add", cmd_add, "add two digit vectors", "x", "y")
    scheme_cmd("solve", cmd_solve, "find x with x + y = z", "z", "y")
    scheme_cmd("table", cmd_table, "print the operation table", cap=True)
    scheme_cmd("verify", cmd_verify, "check group axioms exhaustively", cap=True)

    p = sub.add_parser("count", help="exact counts")
    p.add_argument("base", type=int)
    p.add_argument("m", type=int)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--compositions", action="store_true")
    which.add_argument("--partitions", action="store_true")
    which.add_argument("--schemes", action="store_true", help="compositions x twist units")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", help="count distinct operation tables")
    p.add_argument("base", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--twists", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_TABLE_CAP)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("classify", help="group compositions into isomorphism classes")
    p.add_argument("base", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--profile-cap", type=int, default=64,
                   help="fingerprint tables up to this many elements")
    p.set_defaults(func=cmd_classify)

    def key_cmd(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("key", help="key as hex")
        p.add_argument("base", type=int)
        p.add_argument("m", type=int)
        p.set_defaults(func=fn)
        return p

    p = key_cmd("derive", cmd_derive, "derive a scheme from a key")
    p.add_argument("--transcript", action="store_true")
    for name, fn in (("encrypt", cmd_encrypt), ("decrypt", cmd_decrypt)):
        p = key_cmd(name, fn, f"{name} a digit stream")
        p.add_argument("input")
        p.add_argument("keystream")
        p.add_argument("-o", "--output")
        p.add_argument("--raw", action="store_true", help="raw bytes (base 2, m 8)")

    p = sub.add_parser("list-compositions", help="compositions of m in key order")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_list_compositions)

    p = sub.add_parser("list-units", help="twist units of Z/b^tZ")
    p.add_argument("base", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_list_units)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except (DigitAddError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def run():
    sys.exit(main())
