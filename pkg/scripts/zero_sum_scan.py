#!/usr/bin/env python3
"""Plant a zero-sum subset among random keys and find it by exhaustive scan."""

import argparse
import random

from zerobls import bls
from zerobls.attacks import make_split_zero_set
from zerobls.params import load_params
from zerobls.sim import scan_zero_sum_subsets


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--params", default="default")
    ap.add_argument("--keys", type=int, default=14)
    ap.add_argument("--planted", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cp = load_params(args.params)
    rng = random.Random(args.seed)

    planted = make_split_zero_set(args.planted, b"planted-%d" % args.seed, cp)
    pks = [bls.sk_to_pk(bls.keygen(rng.randbytes(16), cp), cp) for _ in range(args.keys - args.planted)]
    slots = sorted(rng.sample(range(args.keys), args.planted))
    for slot, pk in zip(slots, planted.pks):
        pks.insert(slot, pk)
    found = scan_zero_sum_subsets(pks, args.planted)
    print(f"planted at {tuple(slots)}")
    print(f"found {found}")


if __name__ == "__main__":
    main()
