#!/usr/bin/env python3
"""Split-view simulation sweep: divergence by policy and colluder count."""

import argparse

from zerobls.bls import VerifyPolicy
from zerobls.params import load_params
from zerobls.sim import SimConfig, run_split_view


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--params", default="default")
    ap.add_argument("--nodes", type=int, default=3)
    ap.add_argument("--max-colluders", type=int, default=4)
    args = ap.parse_args()
    cp = load_params(args.params)

    print("policy    colluders  divergence  forged  agg_sig")
    for policy in VerifyPolicy:
        for k in range(2, args.max_colluders + 1):
            cfg = SimConfig.default(nodes=args.nodes, colluders=k, policy=policy)
            rep = run_split_view(cfg, cp)
            print(f"{policy.value:9} {k:9d} {rep.divergence:11d} {rep.forged_accepted:7d}  ...{rep.aggregate_signature[-16:]}")


if __name__ == "__main__":
    main()
