import pytest

from zerobls import bls
from zerobls.attacks import make_split_zero_set
from zerobls.bls import VerifyPolicy
from zerobls.sim import ConfigInvalid, SimConfig, TooManyKeys, run_split_view, scan_zero_sum_subsets


def test_rfc_split_view(cp):
    report = run_split_view(SimConfig.default(policy=VerifyPolicy.RFC), cp)
    assert report.divergence == 3
    assert report.forged_accepted == 3
    assert set(report.accepted_blocks.values()) == {b"block 1", b"block 2", b"block 3"}
    assert report.aggregator_accepted == (True, True, True)
    assert not report.slashing_evidence_found
    lines = report.to_text().splitlines()
    assert len(lines) == 4
    assert lines[0] == "node=0 block=%s verdict=true" % b"block 1".hex()
    assert lines[-1] == f"divergence=3 agg_sig={report.aggregate_signature}"


def test_hardened_split_view(cp):
    report = run_split_view(SimConfig.default(policy=VerifyPolicy.HARDENED), cp)
    assert report.forged_accepted == 0
    assert report.divergence == 1
    assert set(report.accepted_blocks.values()) == {b"block 0"}
    assert not any(v.verdict for v in report.nodes)


def test_honest_only_claims(cp):
    report = run_split_view(SimConfig.default(policy=VerifyPolicy.RFC, mount_attack=False), cp)
    assert set(report.accepted_blocks.values()) == {b"block 0"}
    assert report.divergence == 1


def test_aggregate_is_honest_signature(cp):
    cfg = SimConfig.default()
    report = run_split_view(cfg, cp)
    honest = bls.keygen(cfg.seed + b"/honest", cp)
    assert report.aggregate_signature == bls.sign(honest, cfg.honest_block, cp).to_bytes(cp).hex()


def test_deterministic(cp):
    cfg = SimConfig.default(nodes=4, colluders=3)
    assert run_split_view(cfg, cp).to_text() == run_split_view(cfg, cp).to_text()


def test_divergence_implies_zero_sum_subset(cp):
    for colluders in (2, 3):
        report = run_split_view(SimConfig.default(colluders=colluders), cp)
        assert report.divergence > 1
        found = scan_zero_sum_subsets(report.proposer_keys, colluders)
        assert tuple(range(colluders)) in found


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n_honest_nodes": 1, "blocks": (b"a",)},
        {"colluder_count": 1},
        {"blocks": (b"a", b"a", b"b")},
        {"blocks": (b"a", b"b")},
        {"blocks": (b"block 0", b"b", b"c")},
    ],
)
def test_config_invalid(cp, kwargs):
    base = dict(n_honest_nodes=3, colluder_count=2, blocks=(b"a", b"b", b"c"),
                honest_block=b"block 0", policy=VerifyPolicy.RFC, seed=b"s")
    base.update(kwargs)
    with pytest.raises(ConfigInvalid):
        run_split_view(SimConfig(**base), cp)


def test_scan_finds_pair(cp):
    zs = make_split_zero_set(2, b"scan", cp)
    honest = [bls.sk_to_pk(bls.keygen(b"h%d" % i, cp), cp) for i in range(4)]
    pks = honest[:2] + [zs.pks[0]] + honest[2:] + [zs.pks[1]]
    assert scan_zero_sum_subsets(pks, 2) == [(2, 5)]


def test_scan_honest_empty(cp):
    honest = [bls.sk_to_pk(bls.keygen(b"h%d" % i, cp), cp) for i in range(10)]
    assert scan_zero_sum_subsets(honest, 4) == []


def test_scan_hidden_triple(cp):
    zs = make_split_zero_set(3, b"triple", cp)
    honest = [bls.sk_to_pk(bls.keygen(b"h%d" % i, cp), cp) for i in range(10)]
    pks = honest[:3] + [zs.pks[0]] + honest[3:7] + [zs.pks[1]] + honest[7:] + [zs.pks[2]]
    assert scan_zero_sum_subsets(pks, 2) == []
    assert scan_zero_sum_subsets(pks, 3) == [(3, 8, 12)]


def test_scan_bound(cp):
    pk = bls.sk_to_pk(bls.keygen(b"x", cp), cp)
    with pytest.raises(TooManyKeys):
        scan_zero_sum_subsets([pk] * 25, 2)
    with pytest.raises(ValueError):
        scan_zero_sum_subsets([pk] * 3, 4)
