"""Smoke tests for the python bindings."""

import syncstr as ss


def test_edit_distance_and_lcs():
    a = ss.SymbolString([0, 1, 2, 0, 1], 3)
    b = ss.SymbolString([1, 2, 0], 3)
    assert ss.edit_distance(a, b) == 2
    m = ss.longest_common_subsequence(a, b)
    assert len(m) == 3
    assert ss.edit_distance(a, a) == 0


def test_suffix_distances():
    a = ss.SymbolString([0, 1], 3)
    b = ss.SymbolString([0, 0, 1], 3)
    assert ss.relative_suffix_distance(a, b) == "1/3"
    assert ss.relative_suffix_distance(a, a) == "0"
    assert ss.relative_suffix_pseudo_distance(ss.SymbolString([0], 2), ss.SymbolString([1], 2)) == "2"


def test_construction_and_properties():
    s = ss.construct_sync_string(48, "1/2", 7)
    assert s.property == "full_sync"
    assert ss.check_synchronization(s.body, "1/2")["holds"]

    text = ss.serialize_sync_string(s)
    back = ss.parse_sync_string(text)
    assert back.body == s.body

    sm = ss.construct_self_matching_string(80, "1/4", 9)
    assert ss.check_self_matching(sm.body, "1/4")["holds"]


def test_indexing_roundtrip():
    s = ss.construct_sync_string(60, "1/2", 3)
    t = ss.apply_uniform_channel(s.body, "0.1", "insdel", 11)
    dec = ss.decode_min_rsd(s.body, t.received)
    rep = ss.count_misdecodings(t, dec)
    assert rep.misdecodings <= 4 * 6  # 2*n*delta/(1-eps) at eps=1/2
    assert rep.transmitted_total == 60 - t.deletions


def test_codec_roundtrip():
    sync = ss.construct_self_matching_string(64, "1/4", 21)
    code = ss.InsdelCode(n=64, delta="1/12", eps="1/2", decoder="global", eps_prime="1/4",
                         beta="1/2", gf_m=9, k_msg=32, sync=sync)
    msg = list(range(32))
    cw = code.encode(msg)
    out = code.decode(cw)
    assert out["ok"] and out["msg"] == msg

    t = ss.apply_uniform_channel(cw, "1/12", "insdel", 5)
    noisy = code.decode(t.received)
    assert noisy["ok"] and noisy["msg"] == msg
