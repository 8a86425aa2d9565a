#!/usr/bin/env python3
"""Replay every attack witness under all three policies and print a verdict table."""

import argparse

from zerobls.attacks import ALL_POLICIES, DEMOS, replay
from zerobls.params import load_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--params", default="default")
    ap.add_argument("--seed", default="demo")
    args = ap.parse_args()
    cp = load_params(args.params)

    print(f"{'attack':22} {'check':24} " + " ".join(f"{p.value:>9}" for p in ALL_POLICIES))
    mismatches = 0
    for name in sorted(DEMOS):
        w = DEMOS[name](args.seed.encode(), cp)
        observed = replay(w, cp)
        mismatches += sum(observed[k] != v for k, v in w.verdicts.items())
        labels = list(dict.fromkeys(label for label, _ in w.checks))
        for label in labels:
            cells = [str(observed[(label, p.value)]).lower() for p in ALL_POLICIES]
            print(f"{name:22} {label:24} " + " ".join(f"{c:>9}" for c in cells))
    print(f"mismatches against recorded verdicts: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
