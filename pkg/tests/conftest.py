import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from orientdim import build_digraph  # noqa: E402


@st.composite
def oriented_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            choice = draw(st.sampled_from((None, "fwd", "back")))
            if choice == "fwd":
                arcs.append((u, v))
            elif choice == "back":
                arcs.append((v, u))
    return build_digraph(n, arcs)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        title, ok, seconds, detail = mod.RESULTS[number]
        status = "PASS" if ok else "FAIL"
        line = f"[{status}] criterion {number:>2}: {title} ({seconds:.1f}s)"
        terminalreporter.write_line(line + (f" -- {detail}" if detail else ""))
