"""Rotation-system planar maps with half-edges (darts) and stems.

A map is a pair of permutations on dart ids 0..D-1: ``alpha`` pairs the two
darts of an entire edge (``alpha[d] == d`` marks a stem, a lone half-edge
whose free end is an implicit leaf), and ``sigma`` gives the next dart in the
rotation around the origin vertex of a dart.  Faces are the orbits of
``phi = sigma o alpha``; by convention the face traced by iterating phi lies
on the LEFT of each of its darts, the face on the right of a dart d is the
face of ``alpha[d]``, and a root dart has the outer face on its right.

With stems present, the Euler count treats every stem as one edge carrying an
implicit leaf vertex: V = #sigma-orbits + #stems, E = #entire + #stems, and
genus 0 means V - E + F = 2.
"""

from __future__ import annotations

from collections import deque

from .errors import (
    Disconnected,
    MissingRoot,
    NonInvolution,
    NonPlanar,
    NotPermutation,
    NotSimpleCycle,
    OddCycle,
    PmapFormatError,
)

BLACK = 0
WHITE = 1

# classify() results
BINARY_TREE = "BinaryTreeMap"
QUADRANGULATION = "Quadrangulation"
HEX_DISSECTION = "HexDissection"
OUTER_TRIANGULAR = "OuterTriangular"
OTHER = "Other"


def _orbits(perm):
    n = len(perm)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        d = start
        while not seen[d]:
            seen[d] = True
            cyc.append(d)
            d = perm[d]
        out.append(tuple(cyc))
    return out


class PlanarMap:
    """Immutable genus-0 map; build with :func:`build_map`."""

    __slots__ = (
        "alpha",
        "sigma",
        "root",
        "outer_face",
        "colors",
        "vertex_of",
        "vertices",
        "face_of",
        "faces",
        "_sigma_inv",
        "_eid",
        "_edges",
    )

    def __init__(self, alpha, sigma, root, outer_face, colors, vertex_of,
                 vertices, face_of, faces):
        self.alpha = alpha
        self.sigma = sigma
        self.root = root
        self.outer_face = outer_face
        self.colors = colors
        self.vertex_of = vertex_of
        self.vertices = vertices
        self.face_of = face_of
        self.faces = faces
        self._sigma_inv = None
        self._eid = None
        self._edges = None

    # -- basic accessors ---------------------------------------------------

    @property
    def dart_count(self):
        return len(self.alpha)

    @property
    def stem_count(self):
        return sum(1 for d, a in enumerate(self.alpha) if a == d)

    @property
    def edge_count(self):
        """Entire edges plus stems (a stem counts as one edge)."""
        return (len(self.alpha) + self.stem_count) // 2

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def face_count(self):
        return len(self.faces)

    def is_stem(self, d):
        return self.alpha[d] == d

    def phi(self, d):
        return self.sigma[self.alpha[d]]

    def f_left(self, d):
        return self.face_of[d]

    def f_right(self, d):
        return self.face_of[self.alpha[d]]

    def sigma_inv(self, d):
        if self._sigma_inv is None:
            inv = [0] * len(self.sigma)
            for x, y in enumerate(self.sigma):
                inv[y] = x
            self._sigma_inv = inv
        return self._sigma_inv[d]

    def degree(self, v):
        return len(self.vertices[v])

    def face_degree(self, f):
        return len(self.faces[f])

    def edge_ids(self):
        """Dense edge numbering; returns (eid_per_dart, [(d, alpha d)])."""
        if self._eid is None:
            eid = [-1] * len(self.alpha)
            edges = []
            for d, a in enumerate(self.alpha):
                if eid[d] < 0:
                    eid[d] = eid[a] = len(edges)
                    edges.append((d, a))
            self._eid = eid
            self._edges = edges
        return self._eid, self._edges

    def neighbors(self, v):
        """Vertices adjacent through entire edges (stems excluded)."""
        out = []
        for d in self.vertices[v]:
            a = self.alpha[d]
            if a != d:
                out.append(self.vertex_of[a])
        return out

    def end_vertex(self, d):
        """Far endpoint of a non-stem dart."""
        return self.vertex_of[self.alpha[d]]

    # -- derived views -----------------------------------------------------

    def classify(self):
        if self.face_count == 1 and all(len(r) == 3 for r in self.vertices):
            return BINARY_TREE
        if self.stem_count == 0:
            if all(len(f) == 4 for f in self.faces):
                return QUADRANGULATION
            outer_deg = len(self.faces[self.outer_face])
            inner_ok = all(len(f) == 4
                           for i, f in enumerate(self.faces)
                           if i != self.outer_face)
            if outer_deg == 6 and inner_ok:
                return HEX_DISSECTION
            if outer_deg == 3:
                return OUTER_TRIANGULAR
        return OTHER

    def bicolor(self, seed_vertex=0, seed_color=BLACK):
        """Greedy 2-coloring by BFS over entire edges; OddCycle on conflict."""
        col = [-1] * self.vertex_count
        col[seed_vertex] = seed_color
        queue = deque([seed_vertex])
        while queue:
            v = queue.popleft()
            for w in self.neighbors(v):
                if col[w] < 0:
                    col[w] = 1 - col[v]
                    queue.append(w)
                elif col[w] == col[v]:
                    raise OddCycle("odd cycle met while 2-coloring")
        if any(c < 0 for c in col):
            raise Disconnected("coloring did not reach every vertex")
        return self.with_colors(tuple(col))

    def with_colors(self, colors):
        return PlanarMap(self.alpha, self.sigma, self.root, self.outer_face,
                         tuple(colors), self.vertex_of, self.vertices,
                         self.face_of, self.faces)

    def with_root(self, root):
        """Reroot; the outer face becomes the face right of the new root."""
        return PlanarMap(self.alpha, self.sigma, root,
                         self.face_of[self.alpha[root]], self.colors,
                         self.vertex_of, self.vertices, self.face_of,
                         self.faces)

    def with_outer(self, outer_face):
        return PlanarMap(self.alpha, self.sigma, self.root, outer_face,
                         self.colors, self.vertex_of, self.vertices,
                         self.face_of, self.faces)

    # -- canonical forms ---------------------------------------------------

    def canonical_code(self, root, with_colors=True):
        """BFS dart relabeling from ``root``; equal codes = root-preserving
        isomorphism (colors included when present unless disabled)."""
        alpha, sigma = self.alpha, self.sigma
        n = len(alpha)
        order = [-1] * n
        order[root] = 0
        seq = [root]
        for d in seq:
            s = sigma[d]
            if order[s] < 0:
                order[s] = len(seq)
                seq.append(s)
            a = alpha[d]
            if order[a] < 0:
                order[a] = len(seq)
                seq.append(a)
        code = []
        for d in seq:
            code.append(order[sigma[d]])
            code.append(order[alpha[d]])
        if with_colors and self.colors is not None:
            code.extend(self.colors[self.vertex_of[d]] for d in seq)
        return tuple(code)

    def root_candidates(self):
        """Darts that may serve as a root (outer face on their right)."""
        outer = self.outer_face
        return [d for d in range(len(self.alpha))
                if self.face_of[self.alpha[d]] == outer]

    def canonical_form(self, with_colors=True):
        return min(self.canonical_code(d, with_colors)
                   for d in self.root_candidates())


def build_map(alpha, sigma, root=None, outer_dart=None, colors=None):
    """Validate (alpha, sigma) and assemble a PlanarMap.

    ``outer_dart``, when given without a root, is a dart whose LEFT face is
    the outer one.  With a root, the outer face is the face on the right of
    the root dart.
    """
    alpha = list(alpha)
    sigma = list(sigma)
    n = len(alpha)
    if len(sigma) != n:
        raise NotPermutation("alpha and sigma sizes differ")
    if n == 0:
        raise NotPermutation("empty dart set")
    seen = [False] * n
    for d in range(n):
        a = alpha[d]
        if not 0 <= a < n:
            raise NonInvolution("alpha value out of range")
        if alpha[a] != d:
            raise NonInvolution("alpha is not an involution")
    for d in range(n):
        s = sigma[d]
        if not 0 <= s < n:
            raise NotPermutation("sigma value out of range")
        if seen[s]:
            raise NotPermutation("sigma is not a permutation")
        seen[s] = True

    vert_orbits = _orbits(sigma)
    vertex_of = [0] * n
    for vid, orb in enumerate(vert_orbits):
        for d in orb:
            vertex_of[d] = vid

    phi = [sigma[alpha[d]] for d in range(n)]
    face_orbits = _orbits(phi)
    face_of = [0] * n
    for fid, orb in enumerate(face_orbits):
        for d in orb:
            face_of[d] = fid

    # connectivity under the group generated by sigma and alpha
    reach = [False] * n
    stack = [0]
    reach[0] = True
    count = 1
    while stack:
        d = stack.pop()
        for nxt in (sigma[d], alpha[d]):
            if not reach[nxt]:
                reach[nxt] = True
                count += 1
                stack.append(nxt)
    if count != n:
        raise Disconnected("darts are not connected under sigma and alpha")

    stems = sum(1 for d in range(n) if alpha[d] == d)
    v_eff = len(vert_orbits) + stems
    e_eff = (n + stems) // 2
    if v_eff - e_eff + len(face_orbits) != 2:
        raise NonPlanar("Euler relation V - E + F = 2 fails")

    if root is not None:
        if not 0 <= root < n:
            raise NotPermutation("root dart out of range")
        outer = face_of[alpha[root]]
    elif outer_dart is not None:
        outer = face_of[outer_dart]
    else:
        outer = 0

    if colors is not None:
        colors = tuple(colors)
        if len(colors) != len(vert_orbits):
            raise PmapFormatError("color string length is not vertex count")

    return PlanarMap(tuple(alpha), tuple(sigma), root, outer, colors,
                     tuple(vertex_of), tuple(vert_orbits), tuple(face_of),
                     tuple(face_orbits))


def map_from_rotations(rotations, root=None, outer_dart=None, colors=None):
    """Build a map from per-vertex rotation lists of edge labels.

    Each label must occur exactly twice over all lists (an entire edge) or
    once (a stem).  Dart ids are assigned in reading order, so darts can be
    addressed as running indices into the concatenated lists.
    """
    slots = {}
    alpha = []
    sigma = []
    d = 0
    for rot in rotations:
        first = d
        for lab in rot:
            alpha.append(d)
            sigma.append(d + 1)
            slots.setdefault(lab, []).append(d)
            d += 1
        if rot:
            sigma[d - 1] = first
    for lab, ds in slots.items():
        if len(ds) == 2:
            alpha[ds[0]], alpha[ds[1]] = ds[1], ds[0]
        elif len(ds) != 1:
            raise NonInvolution("edge label %r used %d times" % (lab, len(ds)))
    return build_map(alpha, sigma, root=root, outer_dart=outer_dart,
                     colors=colors)


def maps_isomorphic(a, b, rooted=False):
    """Map isomorphism; unrooted compare respects the outer face.

    Colors take part in the comparison only when both maps carry them.
    """
    if a.dart_count != b.dart_count:
        return False
    wc = a.colors is not None and b.colors is not None
    if rooted:
        if a.root is None or b.root is None:
            raise MissingRoot("rooted comparison needs roots on both maps")
        return (a.canonical_code(a.root, wc) == b.canonical_code(b.root, wc))
    ca = a.canonical_form(wc)
    return any(ca == b.canonical_code(d, wc) for d in b.root_candidates())


# ---------------------------------------------------------------------------
# cycles and sides


def cycle_interior(pm, cycle):
    """Faces strictly inside a simple closed dart walk, plus its chirality.

    Returns ``(interior_faces, is_clockwise)`` where the interior is the side
    not containing the outer face and ``is_clockwise`` is true when that side
    lies on the right of every cycle dart.
    """
    if not cycle:
        raise NotSimpleCycle("empty cycle")
    k = len(cycle)
    verts = []
    for i, d in enumerate(cycle):
        if pm.is_stem(d):
            raise NotSimpleCycle("stems cannot lie on a cycle")
        nxt = cycle[(i + 1) % k]
        if pm.vertex_of[pm.alpha[d]] != pm.vertex_of[nxt]:
            raise NotSimpleCycle("darts are not consecutive")
        verts.append(pm.vertex_of[d])
    if len(set(verts)) != k:
        raise NotSimpleCycle("walk revisits a vertex")

    on_cycle = set()
    for d in cycle:
        on_cycle.add(d)
        on_cycle.add(pm.alpha[d])

    # flood-fill faces from the outer one, crossing only non-cycle edges
    reached = [False] * pm.face_count
    reached[pm.outer_face] = True
    queue = deque([pm.outer_face])
    while queue:
        f = queue.popleft()
        for d in pm.faces[f]:
            if d in on_cycle or pm.is_stem(d):
                continue
            g = pm.face_of[pm.alpha[d]]
            if not reached[g]:
                reached[g] = True
                queue.append(g)
    interior = frozenset(f for f in range(pm.face_count) if not reached[f])
    right0 = pm.face_of[pm.alpha[cycle[0]]]
    return interior, right0 in interior


def find_clockwise_circuit(pm, allowed, max_edges=40):
    """Search for a simple directed cycle whose interior is on its right.

    ``allowed[d]`` says dart d may be traversed in its own direction.  Uses
    exhaustive DFS with path pruning; only meant for verification at desk
    scale, returns None when the map exceeds ``max_edges`` edges.
    """
    if pm.edge_count > max_edges:
        return None
    nv = pm.vertex_count
    for start in range(nv):
        path = []
        on_path = [False] * nv

        def dfs(v):
            if path and v == start:
                interior, cw = cycle_interior(pm, list(path))
                return list(path) if cw else None
            if on_path[v] or (path and v < start):
                return None
            on_path[v] = True
            for d in pm.vertices[v]:
                if pm.is_stem(d) or not allowed[d]:
                    continue
                path.append(d)
                got = dfs(pm.vertex_of[pm.alpha[d]])
                if got is not None:
                    return got
                path.pop()
            on_path[v] = False
            return None

        got = dfs(start)
        if got is not None:
            return got
    return None


def separating_four_cycles(pm):
    """Non-facial 4-cycles, each as a vertex 4-tuple (a, x, b, y)."""
    eid, _ = pm.edge_ids()
    adj = {}
    for v in range(pm.vertex_count):
        nb = {}
        for d in pm.vertices[v]:
            if not pm.is_stem(d):
                nb[pm.vertex_of[pm.alpha[d]]] = eid[d]
        adj[v] = nb
    facial = set()
    for f in pm.faces:
        if len(f) == 4:
            facial.add(frozenset(eid[d] for d in f))
    found = []
    nv = pm.vertex_count
    for a in range(nv):
        for b in range(a + 1, nv):
            common = [x for x in adj[a] if x in adj[b]]
            for i in range(len(common)):
                for j in range(i + 1, len(common)):
                    x, y = common[i], common[j]
                    es = frozenset((adj[a][x], adj[b][x],
                                    adj[b][y], adj[a][y]))
                    if len(es) == 4 and es not in facial:
                        found.append((a, x, b, y))
    return found


def has_separating_four_cycle(pm):
    return bool(separating_four_cycles(pm))


# ---------------------------------------------------------------------------
# structural edits (always produce fresh maps)


def delete_edge(pm, dart, root=None):
    """Remove the entire edge of ``dart``; returns (map, dart_remap).

    ``root``, when given, refers to a dart of the old map and becomes the
    root of the result (outer face on its right).
    """
    a = pm.alpha[dart]
    if a == dart:
        raise NotSimpleCycle("cannot delete a stem as an edge")
    drop = {dart, a}
    remap = [-1] * pm.dart_count
    nxt = 0
    for d in range(pm.dart_count):
        if d not in drop:
            remap[d] = nxt
            nxt += 1
    new_sigma = [0] * nxt
    new_alpha = [0] * nxt
    for d in range(pm.dart_count):
        if d in drop:
            continue
        s = pm.sigma[d]
        while s in drop:
            s = pm.sigma[s]
        new_sigma[remap[d]] = remap[s]
        new_alpha[remap[d]] = remap[pm.alpha[d]]
    new_root = None if root is None else remap[root]
    colors = pm.colors
    return build_map(new_alpha, new_sigma, root=new_root, colors=colors), remap


def submap_of_faces(pm, face_set, root_dart):
    """Submap spanned by the given faces plus their boundary.

    Keeps darts with a side in ``face_set``; the complement becomes the new
    outer face, which must lie on the right of ``root_dart``.
    """
    keep = [False] * pm.dart_count
    for d in range(pm.dart_count):
        if pm.face_of[d] in face_set or pm.face_of[pm.alpha[d]] in face_set:
            keep[d] = True
    remap = [-1] * pm.dart_count
    nxt = 0
    for d in range(pm.dart_count):
        if keep[d]:
            remap[d] = nxt
            nxt += 1
    new_sigma = [0] * nxt
    new_alpha = [0] * nxt
    for d in range(pm.dart_count):
        if not keep[d]:
            continue
        s = pm.sigma[d]
        while not keep[s]:
            s = pm.sigma[s]
        new_sigma[remap[d]] = remap[s]
        new_alpha[remap[d]] = remap[pm.alpha[d]]
    sub = build_map(new_alpha, new_sigma, root=remap[root_dart])
    if pm.colors is not None:
        percol = [-1] * sub.vertex_count
        for d in range(pm.dart_count):
            if keep[d]:
                percol[sub.vertex_of[remap[d]]] = pm.colors[pm.vertex_of[d]]
        sub = sub.with_colors(tuple(percol))
    return sub, remap


# ---------------------------------------------------------------------------
# pmap v1 text format


def to_pmap(pm):
    """Serialize to the line-oriented ``pmap 1`` format.

    Rootless maps are relabeled so that dart 0 has the outer face on its
    right, which is how readers recover the outer face.
    """
    m = pm
    if m.root is None:
        cands = m.root_candidates()
        key = min(range(len(cands)),
                  key=lambda i: m.canonical_code(cands[i], False))
        m = _relabel_from(m, cands[key])
    lines = ["pmap 1", "darts %d" % m.dart_count,
             "alpha " + " ".join(map(str, m.alpha)),
             "sigma " + " ".join(map(str, m.sigma)),
             "root %s" % ("-" if m.root is None else str(m.root))]
    if m.colors is not None:
        lines.append("colors " + "".join("B" if c == BLACK else "W"
                                         for c in m.colors))
    return "\n".join(lines) + "\n"


def _relabel_from(pm, root):
    order = [-1] * pm.dart_count
    order[root] = 0
    seq = [root]
    for d in seq:
        for nxt in (pm.sigma[d], pm.alpha[d]):
            if order[nxt] < 0:
                order[nxt] = len(seq)
                seq.append(nxt)
    alpha = [0] * pm.dart_count
    sigma = [0] * pm.dart_count
    for d in seq:
        sigma[order[d]] = order[pm.sigma[d]]
        alpha[order[d]] = order[pm.alpha[d]]
    colors = None
    tmp = build_map(alpha, sigma, outer_dart=alpha[0])
    if pm.colors is not None:
        percol = [-1] * tmp.vertex_count
        for d in seq:
            percol[tmp.vertex_of[order[d]]] = pm.colors[pm.vertex_of[d]]
        tmp = tmp.with_colors(tuple(percol))
    if pm.root is not None:
        tmp = tmp.with_root(order[pm.root])
    return tmp


def from_pmap(text):
    lines = [ln.rstrip("\n") for ln in text.strip().split("\n")]
    if not lines or lines[0].strip() != "pmap 1":
        raise PmapFormatError("missing 'pmap 1' header")
    fields = {}
    order = []
    for ln in lines[1:]:
        parts = ln.split(None, 1)
        if not parts:
            raise PmapFormatError("blank line inside block")
        key = parts[0]
        if key not in ("darts", "alpha", "sigma", "root", "colors"):
            raise PmapFormatError("unknown line %r" % key)
        if key in fields:
            raise PmapFormatError("duplicate line %r" % key)
        fields[key] = parts[1] if len(parts) > 1 else ""
        order.append(key)
    for req in ("darts", "alpha", "sigma", "root"):
        if req not in fields:
            raise PmapFormatError("missing line %r" % req)
    try:
        n = int(fields["darts"])
        alpha = [int(x) for x in fields["alpha"].split()]
        sigma = [int(x) for x in fields["sigma"].split()]
    except ValueError as exc:
        raise PmapFormatError("bad integer field") from exc
    if len(alpha) != n or len(sigma) != n:
        raise PmapFormatError("dart count does not match permutation length")
    if any(not 0 <= x < n for x in alpha + sigma):
        raise PmapFormatError("dart index out of range")
    root_field = fields["root"].strip()
    root = None
    if root_field != "-":
        try:
            root = int(root_field)
        except ValueError as exc:
            raise PmapFormatError("bad root field") from exc
        if not 0 <= root < n:
            raise PmapFormatError("root out of range")
    colors = None
    if "colors" in fields:
        cs = fields["colors"].strip()
        if cs != "-":
            if set(cs) - {"B", "W"}:
                raise PmapFormatError("colors must be drawn from B/W")
            colors = tuple(BLACK if c == "B" else WHITE for c in cs)
    pm = build_map(alpha, sigma, root=root,
                   outer_dart=(alpha[0] if root is None else None),
                   colors=colors)
    return pm


def read_pmap_blocks(text):
    """Split a stream of blank-line separated pmap blocks."""
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [from_pmap(b) for b in blocks]
