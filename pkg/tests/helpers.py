"""Independent checks shared by the property tests and the acceptance suite."""
from collections import deque

from sttrack.algorithm import consolidate
from sttrack.lineage import track
from sttrack.oracles import UnionFind, backward_reachable, _backward_graph, classical_0barcode
from sttrack.paths import is_spatiotemporal_path


def flood_fill_components(points, neighbours) -> int:
    points = set(points)
    seen, count = set(), 0
    for p in points:
        if p in seen:
            continue
        count += 1
        seen.add(p)
        queue = deque([p])
        while queue:
            x, y = queue.popleft()
            for dx, dy in neighbours:
                q = (x + dx, y + dy)
                if q in points and q not in seen:
                    seen.add(q)
                    queue.append(q)
    return count


N4 = [(1, 0), (-1, 0), (0, 1), (0, -1)]
N8 = N4 + [(1, 1), (1, -1), (-1, 1), (-1, -1)]


def check_f_is_older_vertex(a):
    """Every f-value is a vertex index not larger than its argument."""
    F, f = a.filtration, a.state.f
    return [v for v in F.vertices if not (F.is_vertex(f[v]) and f[v] <= v)]


def check_phi_paths(a):
    """phi(v) is a spatiotemporal path from v to f(v), or empty with f(v) = v."""
    bad = []
    for v in a.filtration.vertices:
        chain, target = a.state.phi[v], a.state.f[v]
        if not chain:
            ok = target == v
        else:
            res = is_spatiotemporal_path(chain, a.filtration)
            ok = res.valid and res.endpoints == (min(v, target), max(v, target))
        if not ok:
            bad.append(v)
    return bad


def check_oracle_agreement(a):
    """f(v) equals the oldest vertex reachable by a time-monotone walk."""
    F = a.filtration
    adj = _backward_graph(F)
    return [v for v in F.vertices if a.state.f[v] != min(backward_reachable(v, F, adj))]


def check_barcode_sanity(a):
    """Births are the vertices; deaths are the birth itself or a TE edge."""
    F, te = a.filtration, set(a.state.TE)
    bars = consolidate(a.state)
    bad = []
    if bars.births != F.vertices:
        bad.append("births")
    for b in bars:
        if not (b.birth <= b.death and (b.death == b.birth or b.death in te)):
            bad.append(b)
    return bad


def check_state_invariants(a):
    s = a.state
    bad = []
    for v, target in s.f.items():
        if (not s.phi[v]) != (target == v):
            bad.append(("phi-empty", v))
        if target not in s.H:
            bad.append(("f-in-H", v))
    bad += [("H-fixed", h) for h in s.H if s.f[h] != h]
    return bad


def check_single_frame_classical(a):
    """Single frame: non-survivors agree with the elder rule; survivors die at
    their last merge instead of at m."""
    F = a.filtration
    classical = classical_0barcode(F)
    st = a.barcode
    uf = UnionFind()
    last = {}
    for cell in F:
        if cell.dim == 0:
            uf.add(cell.index)
            last[cell.index] = cell.index
        else:
            merged = uf.union(*F.endpoints[cell.index])
            if merged:
                last[merged[0]] = cell.index
                last[merged[1]] = cell.index
    bad = []
    for bar in classical:
        if bar.death < F.m or uf.find(bar.birth) != bar.birth:
            if st[bar.birth].death != bar.death:
                bad.append(bar)
        elif st[bar.birth].death != last[bar.birth]:
            bad.append(bar)
    return bad


def check_tracking_soundness(a):
    """Tracking-tree ancestors are all reachable from v by time-monotone walks."""
    F = a.filtration
    adj = _backward_graph(F)
    bad = []
    for v in F.vertices:
        lineage = track(v, a.state, F, a.tree)
        if not set(lineage.ancestors) <= backward_reachable(v, F, adj):
            bad.append(v)
    return bad


def check_tree(a):
    """Parent links form a forest and never point forward in time."""
    F, parent = a.filtration, a.tree.parent
    bad = []
    for v in parent:
        seen = {v}
        u = v
        while u in parent:
            u = parent[u][0]
            if u in seen:
                bad.append(("cycle", v))
                break
            seen.add(u)
        if F.frame[parent[v][0]] > F.frame[v]:
            bad.append(("forward", v))
    return bad


def _connected(chain, filt):
    parent = {}

    def find(v):
        while parent.setdefault(v, v) != v:
            v = parent[v]
        return v

    for e in chain:
        a, b = filt.endpoints[e]
        parent[find(a)] = find(b)
    return len({find(v) for e in chain for v in filt.endpoints[e]}) == 1


def validators_exhaustive(max_size=5):
    """Compare both path validators on every connected edge subset of a
    3-frame stack of full 2x2 pixel graphs.  Returns (checked, mismatches)."""
    import itertools

    from sttrack.imageio import BinaryImage, ImageSequence
    from sttrack.paths import chain_closure, is_homological_0path
    from sttrack.pipeline import sequence_filtration

    filt = sequence_filtration(ImageSequence([BinaryImage.from_rows(["11", "11"])] * 3),
                               "pixel-graph")
    assert len(filt.edges) == 20
    checked, mismatches = 0, []
    for size in range(1, max_size + 1):
        for chain in itertools.combinations(filt.edges, size):
            if not _connected(chain, filt):
                continue
            checked += 1
            if is_spatiotemporal_path(chain, filt).valid != \
                    is_homological_0path(chain_closure(chain, filt), filt):
                mismatches.append(chain)
    return checked, mismatches
