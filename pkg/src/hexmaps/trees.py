"""Plane binary trees, their word encodings, and uniform samplers.

Trees live on the map core: nodes are the map vertices (every one of degree
3), leaves are implicit at the free end of stems.  A rooted binary tree is
rooted at a stem; the node holding it is the root node.  Walking down from
the root stem, the children of a node reached through dart ``p`` (pointing
back up) are ``sigma(p)`` (right) and ``sigma(sigma(p))`` (left).

The word machinery encodes a black-rooted bicolored tree with i black and j
white nodes as a combined word of length 2j+1 (one letter per black-or-leaf
slot hanging under a white node or under the root stem), splits it into a
black/white word pair, and inverts through the cycle lemma: exactly one
rotation of a weight-sum -1 word has nonnegative strict prefix sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import maps
from .errors import (
    CompositionMismatch,
    EmptyClass,
    LengthMismatch,
    MissingRoot,
    NotBicolored,
    NotBlackRooted,
    RankOutOfRange,
    TrailingBits,
    UnbalancedWord,
)
from .maps import BLACK, WHITE

LEAF = "L"
NODE = "N"


@dataclass(frozen=True)
class BinaryTree:
    """A plane binary tree as a map, optionally rooted at a stem."""

    pm: maps.PlanarMap
    root_stem: int | None = None

    @property
    def size(self):
        return self.pm.vertex_count

    @property
    def leaf_count(self):
        return self.pm.vertex_count + 2

    @property
    def colors(self):
        return self.pm.colors

    def unrooted(self):
        return BinaryTree(self.pm, None)

    def stems(self):
        return [d for d in range(self.pm.dart_count) if self.pm.is_stem(d)]

    def color_counts(self):
        if self.pm.colors is None:
            raise NotBicolored("tree has no colors")
        blacks = sum(1 for c in self.pm.colors if c == BLACK)
        return blacks, self.pm.vertex_count - blacks


@dataclass(frozen=True)
class TreeWord:
    kind: str  # "combined" | "black" | "white"
    letters: tuple

    def __str__(self):
        if self.kind == "combined":
            return " ".join(l if l == LEAF else "N(%s)" % l[1]
                            for l in self.letters)
        return "".join(self.letters)


# ---------------------------------------------------------------------------
# structures <-> maps

def tree_from_structure(struct):
    """Build a rooted tree map from nested (color, left, right) tuples.

    ``None`` denotes a leaf slot; the outermost value must be a node.  The
    root stem gets dart id 0.
    """
    sigma = []
    alpha = []
    colors = []

    def new_node(color):
        base = len(sigma)
        sigma.extend((base + 1, base + 2, base))
        alpha.extend((base, base + 1, base + 2))
        colors.append(color)
        return base

    def attach(parent_dart, slot):
        if slot is None:
            return
        up = build(slot)
        alpha[parent_dart] = up
        alpha[up] = parent_dart

    def build(node):
        color, left, right = node
        up = new_node(color)
        attach(up + 1, right)
        attach(up + 2, left)
        return up

    if struct is None:
        raise UnbalancedWord("empty tree structure")
    root_up = build(struct)
    col = tuple(colors) if any(c is not None for c in colors) else None
    pm = maps.build_map(alpha, sigma, colors=col)
    return BinaryTree(pm, root_stem=root_up)


def tree_to_structure(tree):
    if tree.root_stem is None:
        raise MissingRoot("structure extraction needs a rooted tree")
    pm = tree.pm

    def walk(up):
        v = pm.vertex_of[up]
        color = None if pm.colors is None else pm.colors[v]
        right_d = pm.sigma[up]
        left_d = pm.sigma[right_d]

        def sub(d):
            a = pm.alpha[d]
            return None if a == d else walk(a)

        return (color, sub(left_d), sub(right_d))

    return walk(tree.root_stem)


# ---------------------------------------------------------------------------
# words for black-rooted bicolored trees

def tree_to_words(tree):
    """Combined, black and white words of a black-rooted bicolored tree."""
    if tree.pm.colors is None:
        raise NotBicolored("word encoding needs a bicolored tree")
    if tree.root_stem is None:
        raise NotBlackRooted("word encoding needs a tree rooted at a stem")
    struct = tree_to_structure(tree)
    if struct[0] != BLACK:
        raise NotBlackRooted("root node is not black")

    combined = []
    black = []
    white = []

    def emit_slot(slot):
        if slot is None:
            combined.append(LEAF)
            black.append(LEAF)
            return
        color, left, right = slot
        pat = "".join("n" if ch is not None else "l" for ch in (left, right))
        combined.append((NODE, pat))
        black.append(NODE)
        white.extend(pat)
        for ch in (left, right):
            if ch is not None:
                emit_slot(ch[1])
                emit_slot(ch[2])

    emit_slot(struct)
    return (TreeWord("combined", tuple(combined)),
            TreeWord("black", tuple(black)),
            TreeWord("white", tuple(white)))


def _letter_weight(letter):
    if letter == LEAF:
        return -1
    return 2 * letter[1].count("n") - 1


def nonneg_rotation(weights):
    """Index of the unique rotation with all strict prefix sums >= 0.

    Requires total weight -1; this is the cycle lemma.
    """
    total = 0
    best = 0
    best_at = 0
    for t, w in enumerate(weights, start=1):
        total += w
        if total < best:
            best = total
            best_at = t
    if total != -1:
        raise UnbalancedWord("word weight sum is %d, not -1" % total)
    return best_at % len(weights)


def _parse_combined(letters):
    it = iter(letters)

    def next_letter():
        try:
            return next(it)
        except StopIteration:
            raise UnbalancedWord("combined word ended early") from None

    def parse_slot():
        letter = next_letter()
        if letter == LEAF:
            return None
        pat = letter[1]
        kids = []
        for ch in pat:
            if ch == "n":
                kids.append((WHITE, None, None))  # placeholder
            else:
                kids.append(None)
        # white children consume further slots in order: left then right
        filled = []
        for kid in kids:
            if kid is None:
                filled.append(None)
            else:
                a = parse_slot()
                b = parse_slot()
                filled.append((WHITE, a, b))
        return (BLACK, filled[0], filled[1])

    root = parse_slot()
    if root is None:
        raise UnbalancedWord("combined word starts with a leaf")
    leftover = sum(1 for _ in it)
    if leftover:
        raise UnbalancedWord("combined word has %d trailing letters"
                             % leftover)
    return root


def words_to_tree(black_word, white_word):
    """Rebuild the black-rooted tree from its (black, white) word pair."""
    bl = black_word.letters if isinstance(black_word, TreeWord) \
        else tuple(black_word)
    wh = white_word.letters if isinstance(white_word, TreeWord) \
        else tuple(white_word)
    if len(bl) % 2 != 1:
        raise LengthMismatch("black word length must be odd")
    j = (len(bl) - 1) // 2
    i = sum(1 for x in bl if x == NODE)
    if sum(1 for x in bl if x not in (NODE, LEAF)):
        raise CompositionMismatch("black word letters must be N or L")
    if set(wh) - {"n", "l"}:
        raise CompositionMismatch("white word letters must be n or l")
    if len(wh) != 2 * i:
        raise LengthMismatch("white word length %d, expected %d"
                             % (len(wh), 2 * i))
    if sum(1 for x in wh if x == "n") != j:
        raise CompositionMismatch("white word must carry %d node letters" % j)

    combined = []
    pos = 0
    for x in bl:
        if x == LEAF:
            combined.append(LEAF)
        else:
            combined.append((NODE, wh[pos] + wh[pos + 1]))
            pos += 2
    r = nonneg_rotation([_letter_weight(l) for l in combined])
    rotated = combined[r:] + combined[:r]
    return tree_from_structure(_parse_combined(rotated))


# ---------------------------------------------------------------------------
# samplers

def sample_black_rooted(i, j, rng):
    """Uniform tree of the black-rooted (i, j) class, in linear time."""
    if i < 1 or j < 0 or i > 2 * j + 1 or j > 2 * i:
        raise EmptyClass("no black-rooted tree with %d black, %d white"
                         % (i, j))
    bpos = set(rng.sample(range(2 * j + 1), i))
    black = tuple(NODE if t in bpos else LEAF for t in range(2 * j + 1))
    wpos = set(rng.sample(range(2 * i), j))
    white = tuple("n" if t in wpos else "l" for t in range(2 * i))
    return words_to_tree(black, white)


def sample_rooted_binary(n, rng):
    """Uniform rooted binary tree with n nodes (Catalan classes)."""
    if n < 1:
        raise EmptyClass("need at least one node")
    npos = set(rng.sample(range(2 * n + 1), n))
    weights = [1 if t in npos else -1 for t in range(2 * n + 1)]
    r = nonneg_rotation(weights)
    word = [(t in npos) for t in range(2 * n + 1)]
    word = word[r:] + word[:r]
    it = iter(word)

    def parse():
        if not next(it):
            return None
        return (None, parse_child(), parse_child())

    def parse_child():
        if not next(it):
            return None
        return (None, parse_child(), parse_child())

    return tree_from_structure(parse())


def _valid_pair_starts(weights):
    """Rotations of a weight-sum -2 word whose strict prefixes stay >= -1."""
    m = len(weights)
    valid = []
    for r in range(m):
        total = 0
        ok = True
        for t in range(m - 1):
            total += weights[(r + t) % m]
            if total < -1:
                ok = False
                break
        if ok:
            valid.append(r)
    return valid


def sample_triangulation_tree(n, rng):
    """Uniform stem-on-white-only tree with n black nodes, rooted at a stem.

    Samples the pair-of-quaternary-trees word of length 4n+2 and applies the
    two-start cycle lemma, so no rejection is involved.
    """
    m = 4 * n + 2
    npos = set(rng.sample(range(m), n))
    weights = [3 if t in npos else -1 for t in range(m)]
    starts = _valid_pair_starts(weights)
    if len(starts) != 2:
        raise UnbalancedWord("cycle lemma failure (got %d starts)"
                             % len(starts))
    r = starts[rng.randrange(2)]
    word = [((r + t) % m) in npos for t in range(m)]
    it = iter(word)

    def parse_quaternary():
        if not next(it):
            return None
        return tuple(parse_quaternary() for _ in range(4))

    q1 = parse_quaternary()
    q2 = parse_quaternary()
    if sum(1 for _ in it):
        raise UnbalancedWord("quaternary pair left trailing letters")

    def conv(q):
        if q is None:
            return None
        c1, c2, c3, c4 = (conv(x) for x in q)
        return (BLACK, (WHITE, c1, c2), (WHITE, c3, c4))

    return tree_from_structure((WHITE, conv(q1), conv(q2)))


# ---------------------------------------------------------------------------
# parenthesis code

def paren_encode(tree):
    """Preorder bit word: 1 descends into a node, 0 closes a leaf slot.

    Emits exactly 2n bits for n nodes (the forced final 0 is dropped).
    """
    if tree.root_stem is None:
        raise MissingRoot("parenthesis code needs a tree rooted at a stem")
    struct = tree_to_structure(tree)
    bits = []

    def emit(slot):
        if slot is None:
            bits.append("0")
        else:
            bits.append("1")
            emit(slot[1])
            emit(slot[2])

    emit(struct)
    assert bits[-1] == "0"
    return "".join(bits[:-1])


def paren_decode(bits):
    if set(bits) - {"0", "1"}:
        raise UnbalancedWord("parenthesis word must be over 0/1")
    word = bits + "0"
    slots = 1
    used = 0
    for ch in word:
        if slots <= 0:
            raise TrailingBits("bits left after the tree closed")
        slots += 1 if ch == "1" else -1
        used += 1
    if slots != 0:
        raise UnbalancedWord("parenthesis word leaves open slots")
    it = iter(word)

    def parse():
        if next(it) == "0":
            return None
        return (None, parse(), parse())

    struct = parse()
    if struct is None:
        raise UnbalancedWord("parenthesis word encodes an empty tree")
    return tree_from_structure(struct)


# ---------------------------------------------------------------------------
# enumerative (rank/unrank) coding of fixed-weight binary words

def rank_composition_word(word):
    """Rank of a 0/1 word among same-length same-weight words, lex order."""
    n = len(word)
    k = sum(1 for c in word if c == "1")
    rank = 0
    for t, c in enumerate(word):
        if c == "1":
            rank += comb(n - 1 - t, k)
            k -= 1
    return rank


def unrank_composition_word(length, ones, rank):
    if rank < 0 or rank >= comb(length, ones):
        raise RankOutOfRange("rank %d out of %d" % (rank, comb(length, ones)))
    out = []
    k = ones
    for t in range(length):
        c0 = comb(length - 1 - t, k)
        if rank < c0:
            out.append("0")
        else:
            out.append("1")
            rank -= c0
            k -= 1
    return "".join(out)


# ---------------------------------------------------------------------------
# predicates

def is_triangulation_tree(tree):
    """True when every stem hangs from a white node."""
    if tree.pm.colors is None:
        raise NotBicolored("predicate needs a bicolored tree")
    pm = tree.pm
    return all(pm.colors[pm.vertex_of[d]] == WHITE for d in tree.stems())


def stem_color_counts(tree):
    """(stems at black nodes, stems at white nodes)."""
    if tree.pm.colors is None:
        raise NotBicolored("needs a bicolored tree")
    pm = tree.pm
    at_black = sum(1 for d in tree.stems()
                   if pm.colors[pm.vertex_of[d]] == BLACK)
    return at_black, len(tree.stems()) - at_black
