"""Command-line front end.

Exit codes: 0 success or a true verdict, 1 a false verdict (or failed
vectors), 2 usage error, 3 internal error.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, TextIO

from . import bls
from .attacks import ALL_POLICIES, DEMOS, replay
from .bls import VerifyPolicy
from .codec import DecodeError
from .params import CurveParams, ParamsError, generate_params, load_params
from .sim import SimConfig, run_split_view
from .vectors import VectorRecord, evaluate, parse_vectors, write_vectors

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _hex(value: str) -> bytes:
    try:
        return bytes.fromhex(value)
    except ValueError as exc:
        raise UsageError(f"not hex: {value!r}") from exc


def _honest_records(cp: CurveParams, seed: bytes) -> List[VectorRecord]:
    sks = [bls.keygen(seed + b"/honest/%d" % i, cp) for i in range(3)]
    pks = [bls.sk_to_pk(sk, cp) for sk in sks]
    pkb = tuple(pk.to_bytes(cp) for pk in pks)
    msgs = tuple(b"honest message %d" % i for i in range(3))
    same = b"shared message"
    out = []

    def every(scheme, op, pk, msg, sig, expect=True):
        for policy in ALL_POLICIES:
            out.append(VectorRecord(scheme, op, policy, tuple(pk), tuple(msg), sig, expect))

    # basic
    sig0 = bls.sign(sks[0], msgs[0], cp).to_bytes(cp)
    every("basic", "verify", pkb[:1], msgs[:1], sig0)
    every("basic", "verify", pkb[1:2], msgs[:1], sig0, False)
    agg = bls.aggregate([bls.sign(sk, m, cp) for sk, m in zip(sks, msgs)]).to_bytes(cp)
    every("basic", "aggregate_verify", pkb, msgs, agg)
    # message augmentation
    aug0 = bls.sign_aug(sks[0], same, cp).to_bytes(cp)
    every("aug", "verify", pkb[:1], (same,), aug0)
    every("aug", "verify", pkb[1:2], (same,), aug0, False)
    aug_agg = bls.aggregate([bls.sign_aug(sk, same, cp) for sk in sks]).to_bytes(cp)
    every("aug", "aggregate_verify", pkb, (same,) * 3, aug_agg)
    # proof of possession
    for sk, b in zip(sks, pkb):
        every("pop", "pop_verify", (b,), (), bls.pop_prove(sk, cp).to_bytes(cp))
        every("pop", "key_validate", (b,), (), b"")
    same_agg = bls.aggregate([bls.sign(sk, same, cp) for sk in sks]).to_bytes(cp)
    every("pop", "fast_aggregate_verify", pkb, (same,), same_agg)
    every("pop", "fast_aggregate_verify", pkb, (b"other message",), same_agg, False)
    every("pop", "aggregate_verify", pkb, msgs, agg)
    return out


def _alias_records(cp: CurveParams) -> List[VectorRecord]:
    out = []
    n = cp.fe_len
    for u in (0x40, 0x60, 0xC0, 0xE0):
        b = bytes([u]) + bytes(n - 1)
        for policy in ALL_POLICIES:
            out.append(VectorRecord("pop", "key_validate", policy, (b,), (), b"", bls.key_validate(b, policy, cp)))
    return out


def emit_vectors(out: TextIO, cp: CurveParams, seed: bytes) -> int:
    """Write the deterministic vector suite; returns the record count."""
    records = _honest_records(cp, seed)
    for name in sorted(DEMOS):
        records.extend(DEMOS[name](seed + b"/" + name.encode(), cp).records())
    records.extend(_alias_records(cp))
    header = [
        "zerobls test vectors",
        f"params {cp.to_text()}",
        f"seed {seed.hex()}",
    ]
    return write_vectors(out, records, header)


def check_vectors(lines, cp: CurveParams, policy: Optional[VerifyPolicy] = None):
    """Return (total, failures) where failures lists (record, observed)."""
    records = parse_vectors(lines)
    failures = []
    for rec in records:
        got = evaluate(rec, cp, policy)
        if got != rec.expect:
            failures.append((rec, got))
    return len(records), failures


def _policy(value: str) -> VerifyPolicy:
    try:
        return VerifyPolicy(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"policy must be one of rfc, hardened, lenient; got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zerobls", description="BLS zero-bug laboratory")
    parser.add_argument("--params", default="default",
                        help="params file, 'default' (60-bit fixture) or 'tiny' (p=19)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-params")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("keygen")
    p.add_argument("--seed", required=True)

    p = sub.add_parser("sign")
    p.add_argument("--sk", required=True)
    p.add_argument("--msg", required=True)

    p = sub.add_parser("verify")
    p.add_argument("--pk", required=True)
    p.add_argument("--msg", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--policy", type=_policy, default=VerifyPolicy.RFC)

    p = sub.add_parser("aggregate")
    p.add_argument("--sigs", required=True)

    p = sub.add_parser("demo")
    p.add_argument("name", choices=sorted(DEMOS))
    p.add_argument("--seed", default="demo")

    p = sub.add_parser("sim")
    p.add_argument("scenario", choices=["split-view"])
    p.add_argument("--nodes", type=int, default=3)
    p.add_argument("--colluders", type=int, default=2)
    p.add_argument("--policy", type=_policy, default=VerifyPolicy.RFC)
    p.add_argument("--seed", default="split-view")

    p = sub.add_parser("vectors")
    vsub = p.add_subparsers(dest="action", required=True)
    e = vsub.add_parser("emit")
    e.add_argument("--out", required=True)
    e.add_argument("--seed", default="vectors")
    c = vsub.add_parser("check")
    c.add_argument("--in", dest="infile", required=True)
    c.add_argument("--policy-override", type=_policy, default=None)
    return parser


def _run(args, out: TextIO, err: TextIO) -> int:
    if args.command == "gen-params":
        print(generate_params(args.bits, args.seed).to_text(), file=out)
        return EXIT_OK

    cp = load_params(args.params)

    if args.command == "keygen":
        sk = bls.keygen(args.seed.encode(), cp)
        print(f"sk={sk.to_bytes(cp).hex()}", file=out)
        print(f"pk={bls.sk_to_pk(sk, cp).to_bytes(cp).hex()}", file=out)
        return EXIT_OK

    if args.command == "sign":
        try:
            sk = bls.SecretKey.from_bytes(_hex(args.sk), cp)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        print(bls.sign(sk, _hex(args.msg), cp).to_bytes(cp).hex(), file=out)
        return EXIT_OK

    if args.command == "verify":
        policy = args.policy
        try:
            pk = bls.pk_from_bytes(_hex(args.pk), policy, cp)
            sig = bls.sig_from_bytes(_hex(args.sig), policy, cp)
            ok = bls.verify(pk, _hex(args.msg), sig, policy, cp)
        except DecodeError as exc:
            print(f"decode failed: {exc.reason}", file=err)
            ok = False
        print("true" if ok else "false", file=out)
        return EXIT_OK if ok else EXIT_FALSE

    if args.command == "aggregate":
        try:
            sigs = [bls.sig_from_bytes(_hex(s), VerifyPolicy.RFC, cp) for s in args.sigs.split(",")]
        except DecodeError as exc:
            raise UsageError(f"bad signature: {exc.reason}") from exc
        print(bls.aggregate(sigs).to_bytes(cp).hex(), file=out)
        return EXIT_OK

    if args.command == "demo":
        w = DEMOS[args.name](args.seed.encode(), cp)
        observed = replay(w, cp)
        print(f"# {w.description}", file=out)
        for key, value in w.inputs.items():
            print(f"{key}={value}", file=out)
        for policy in ALL_POLICIES:
            parts = [f"{label}={str(v).lower()}" for (label, pol), v in observed.items() if pol == policy.value]
            print(f"policy={policy.value} " + " ".join(parts), file=out)
        for key, value in w.notes.items():
            print(f"note {key}={value}", file=out)
        if observed != w.verdicts:
            print("replayed verdicts differ from the recorded ones", file=err)
            return EXIT_INTERNAL
        return EXIT_OK

    if args.command == "sim":
        cfg = SimConfig.default(nodes=args.nodes, colluders=args.colluders,
                                policy=args.policy, seed=args.seed.encode())
        report = run_split_view(cfg, cp)
        print(report.to_text(), file=out)
        return EXIT_OK

    if args.command == "vectors":
        if args.action == "emit":
            with open(args.out, "w") as fh:
                n = emit_vectors(fh, cp, args.seed.encode())
            print(f"wrote {n} records to {args.out}", file=out)
            return EXIT_OK
        with open(args.infile) as fh:
            lines = fh.readlines()
        for line in lines:
            if line.startswith("# params ") and line[len("# params "):].strip() != cp.to_text():
                print("warning: vectors were emitted under different params", file=err)
        total, failures = check_vectors(lines, cp, args.policy_override)
        for rec, got in failures:
            print(f"FAIL got={str(got).lower()} {rec.to_line()}", file=out)
        print(f"checked={total} failed={len(failures)}", file=out)
        return EXIT_OK if not failures else EXIT_FALSE

    raise UsageError(f"unknown command {args.command}")


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _run(args, out, err)
    except (UsageError, ParamsError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=err)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
