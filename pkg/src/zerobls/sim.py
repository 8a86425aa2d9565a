"""Single-round split-view simulation with zero-sum colluding proposers.

One honest proposer and a SplitZeroSet of colluders each hand exactly one
signature on the honest block to the aggregator. The colluders' signatures
cancel, so the broadcast aggregate is just the honest signature. Each honest
node then hears, from its colluding neighbor, a claimed message vector that
puts a different block under the colluders' keys.

How neighbors map to claimed message vectors is a modelling choice: node i
receives (blk_i, ..., blk_i, honest_block) for the key order
(colluder_1, ..., colluder_k, honest). A node whose claim fails falls back
to the honest proposer's block, which the aggregate certifies on its own.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import bls
from .attacks import make_split_zero_set
from .bls import PublicKey, VerifyPolicy
from .curve import G1Point
from .params import CurveParams

MAX_SCAN_KEYS = 24


class ConfigInvalid(ValueError):
    pass


class TooManyKeys(ValueError):
    pass


@dataclass(frozen=True)
class SimConfig:
    n_honest_nodes: int
    colluder_count: int
    blocks: Tuple[bytes, ...]
    honest_block: bytes
    policy: VerifyPolicy
    seed: bytes
    mount_attack: bool = True

    def validate(self) -> None:
        if self.n_honest_nodes < 2:
            raise ConfigInvalid("need at least two honest nodes")
        if self.colluder_count < 2:
            raise ConfigInvalid("need at least two colluders")
        if len(self.blocks) != self.n_honest_nodes:
            raise ConfigInvalid("one block payload per honest node")
        if len(set(self.blocks) | {self.honest_block}) != len(self.blocks) + 1:
            raise ConfigInvalid("block payloads must be pairwise distinct")
        if not self.seed:
            raise ConfigInvalid("empty seed")

    @classmethod
    def default(cls, nodes: int = 3, colluders: int = 2, policy: VerifyPolicy = VerifyPolicy.RFC,
                seed: bytes = b"split-view", mount_attack: bool = True) -> SimConfig:
        return cls(
            n_honest_nodes=nodes,
            colluder_count=colluders,
            blocks=tuple(b"block %d" % (i + 1) for i in range(nodes)),
            honest_block=b"block 0",
            policy=policy,
            seed=seed,
            mount_attack=mount_attack,
        )


@dataclass(frozen=True)
class NodeView:
    node: int
    claimed: Tuple[bytes, ...]
    verdict: bool
    accepted_block: Optional[bytes]


@dataclass(frozen=True)
class SimReport:
    aggregate_signature: str
    nodes: Tuple[NodeView, ...]
    aggregator_accepted: Tuple[bool, ...]
    honest_block: bytes
    slashing_evidence_found: bool
    proposer_keys: Tuple[PublicKey, ...]

    @property
    def accepted_blocks(self) -> Dict[int, Optional[bytes]]:
        return {v.node: v.accepted_block for v in self.nodes}

    @property
    def divergence(self) -> int:
        return len({v.accepted_block for v in self.nodes if v.accepted_block is not None})

    @property
    def forged_accepted(self) -> int:
        return sum(
            1 for v in self.nodes
            if v.accepted_block is not None and v.accepted_block != self.honest_block
        )

    def to_text(self) -> str:
        lines = []
        for v in self.nodes:
            block = v.accepted_block.hex() if v.accepted_block is not None else ""
            lines.append(f"node={v.node} block={block} verdict={str(v.verdict).lower()}")
        lines.append(f"divergence={self.divergence} agg_sig={self.aggregate_signature}")
        return "\n".join(lines)


def run_split_view(config: SimConfig, cp: CurveParams) -> SimReport:
    config.validate()
    policy = config.policy

    honest_sk = bls.keygen(config.seed + b"/honest", cp)
    honest_pk = bls.sk_to_pk(honest_sk, cp)
    colluders = make_split_zero_set(config.colluder_count, config.seed + b"/colluders", cp)
    proposers = list(zip(colluders.sks, colluders.pks)) + [(honest_sk, honest_pk)]

    # Round 1: every proposer submits once; the aggregator keeps the first
    # valid signature per key and would flag a second, conflicting one.
    submissions = [(pk, config.honest_block, bls.sign(sk, config.honest_block, cp)) for sk, pk in proposers]
    seen: Dict[PublicKey, bytes] = {}
    accepted: List[bool] = []
    slashing = False
    kept = []
    for pk, block, sig in submissions:
        if pk in seen:
            slashing = slashing or seen[pk] != block
            accepted.append(False)
            continue
        ok = bls.verify(pk, block, sig, policy, cp)
        accepted.append(ok)
        if ok:
            seen[pk] = block
            kept.append(sig)
    agg_sig = bls.aggregate(kept)

    pks = [pk for _, pk in proposers]
    views = []
    for node, blk in enumerate(config.blocks):
        claimed_block = blk if config.mount_attack else config.honest_block
        claimed = (claimed_block,) * config.colluder_count + (config.honest_block,)
        verdict = bls.aggregate_verify(pks, list(claimed), agg_sig, policy, cp)
        if verdict:
            chosen = claimed_block
        elif bls.verify(honest_pk, config.honest_block, agg_sig, policy, cp):
            chosen = config.honest_block
        else:
            chosen = None
        views.append(NodeView(node=node, claimed=claimed, verdict=verdict, accepted_block=chosen))

    return SimReport(
        aggregate_signature=agg_sig.to_bytes(cp).hex(),
        nodes=tuple(views),
        aggregator_accepted=tuple(accepted),
        honest_block=config.honest_block,
        slashing_evidence_found=slashing,
        proposer_keys=tuple(pks),
    )


def scan_zero_sum_subsets(pks: Sequence[PublicKey], max_subset: int) -> List[Tuple[int, ...]]:
    """Every nonempty index subset of size <= max_subset whose keys sum to zero.

    Exhaustive, so only usable for a couple dozen keys.
    """
    if len(pks) > MAX_SCAN_KEYS:
        raise TooManyKeys(f"{len(pks)} keys exceeds the scan bound of {MAX_SCAN_KEYS}")
    if max_subset > len(pks):
        raise ValueError("max_subset larger than the key set")
    found = []
    for size in range(1, max_subset + 1):
        for idx in itertools.combinations(range(len(pks)), size):
            total = G1Point.infinity()
            for i in idx:
                total = total + pks[i].point
            if total.is_infinity():
                found.append(idx)
    return found
