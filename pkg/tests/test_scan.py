from fpcodes._scan import WINDOW_PER_JOB, first_violation


def _counted(n, pulled):
    for item in range(n):
        pulled.append(item)
        yield item


def test_sequential_scan_stops_at_the_first_hit():
    pulled = []
    assert first_violation({0: "hit"}.get, _counted(200_000, pulled)) == "hit"
    assert len(pulled) == 1


def test_parallel_scan_pulls_a_bounded_window():
    pulled = []
    witness = first_violation({0: "hit"}.get, _counted(200_000, pulled),
                              jobs=2, chunk_size=10)
    assert witness == "hit"
    assert len(pulled) <= WINDOW_PER_JOB * 2 * 10


def test_parallel_scan_returns_the_first_hit_in_order():
    hits = {1234: "first", 5000: "second"}.get
    assert first_violation(hits, range(10_000), jobs=2, chunk_size=100) == \
        first_violation(hits, range(10_000)) == "first"
    assert first_violation({}.get, range(10_000), jobs=3, chunk_size=64) \
        is None


def test_short_streams_run_in_process():
    assert first_violation({3: "x"}.get, range(5), jobs=4) == "x"
    assert first_violation({3: "x"}.get, [], jobs=4) is None
