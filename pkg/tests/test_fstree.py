import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from cslab import fstree
from cslab.fstree import FSTree, build, unbuild

K4_SHORT = (2, 4, 7, 1, 3, 6, 8, 9, 5)


def naive_build(word):
    """Recursive min split, returned as nested (label, left, right)."""
    if not word:
        return None
    i = word.index(min(word))
    return (word[i], naive_build(word[:i]), naive_build(word[i + 1 :]))


def as_nested(tree, v=None, top=True):
    if top:
        v = tree.root
    if v is None:
        return None
    return (v, as_nested(tree, tree.left.get(v), False), as_nested(tree, tree.right.get(v), False))


def root_paths(tree):
    """label -> list of (ancestor, side) steps from the root, computed naively."""
    out = {}

    def rec(v, path):
        if v is None:
            return
        out[v] = path
        rec(tree.left.get(v), path + [(v, "l")])
        rec(tree.right.get(v), path + [(v, "r")])

    rec(tree.root, [])
    return out


def literal_levelwise(tree):
    """The three defining rules, checked pair by pair."""
    paths = root_paths(tree)
    level = {v: sum(1 for _, s in p if s == "r") for v, p in paths.items()}
    for u in paths:
        for v in paths:
            if u == v:
                continue
            if level[u] < level[v] and not u < v:
                return False
            # Rule 2: vertices in the left subtree of u carry larger labels.
            if (u, "l") in paths[v] and not v > u:
                return False
            if level[u] == level[v]:
                pu, pv = paths[u], paths[v]
                j = 0
                while j < min(len(pu), len(pv)) and pu[j] == pv[j]:
                    j += 1
                if j < len(pu) and j < len(pv):
                    # Split at a common ancestor: the right-hand one comes first.
                    if pu[j][1] == "r" and not u < v:
                        return False
    return True


def test_build_examples():
    t = build([1])
    assert t.root == 1 and not t.left and not t.right
    t = build([2, 1, 3])
    assert (t.root, t.left, t.right) == (1, {1: 2}, {1: 3})
    t = build(K4_SHORT)
    assert t.root == 1
    assert as_nested(t)[1] == as_nested(build([2, 4, 7]))
    assert as_nested(t)[2] == as_nested(build([3, 6, 8, 9, 5]))
    with pytest.raises(ValueError):
        build([1, 2, 1])


@pytest.mark.parametrize("n", range(0, 8))
def test_build_matches_recursion_and_roundtrips(n):
    for w in permutations(range(1, n + 1)):
        t = build(w)
        assert as_nested(t) == naive_build(list(w))
        assert tuple(unbuild(t)) == w


def test_unbuild_small():
    assert unbuild(FSTree(1)) == [1]
    assert unbuild(FSTree(1, {}, {1: 2, 2: 3})) == [1, 2, 3]


def test_levels_examples():
    assert fstree.levels(build([1, 2, 3, 4])) == {1: 0, 2: 1, 3: 2, 4: 3}
    assert fstree.levels(build([4, 3, 2, 1])) == {1: 0, 2: 0, 3: 0, 4: 0}
    assert fstree.levels(build([1, 3, 4, 2])) == {1: 0, 2: 1, 3: 1, 4: 2}
    assert fstree.word_levels([1, 3, 4, 2]) == [0, 1, 2, 1]


def test_rl_words():
    t = build([1, 3, 4, 2])
    assert fstree.rl_word(t, 1) == ""
    assert fstree.rl_word(t, 4) == "rlr"
    # root 1, right child 2, whose left child 3 has left child 4
    t = build([1, 4, 3, 2])
    assert fstree.rl_word(t, 4) == "rll"
    with pytest.raises(KeyError):
        fstree.rl_word(t, 9)


@pytest.mark.parametrize("n", range(1, 7))
def test_level_is_count_of_right_steps(n):
    for w in permutations(range(1, n + 1)):
        t = build(w)
        lv = fstree.levels(t)
        paths = root_paths(t)
        for v in w:
            assert lv[v] == fstree.rl_word(t, v).count("r") == sum(s == "r" for _, s in paths[v])


def test_levelwise_examples():
    assert fstree.is_levelwise_numbered(build([1, 2, 3]))
    assert not fstree.is_levelwise_numbered(build([3, 1, 2]))
    assert fstree.is_levelwise_numbered(build(K4_SHORT))
    with pytest.raises(ValueError):
        fstree.is_levelwise_numbered(build([2, 3]))


@pytest.mark.parametrize("n", range(1, 8))
def test_levelwise_matches_literal_rules(n):
    count = 0
    for w in permutations(range(1, n + 1)):
        t = build(w)
        got = fstree.is_levelwise_numbered(t)
        assert got == literal_levelwise(t)
        count += got
    assert count == math.comb(2 * n, n) // (n + 1)


def test_levelwise_numbering_examples():
    chain_r = (None, (None, (None, None)))
    t = fstree.levelwise_numbering(chain_r)
    assert (t.root, t.right, t.left) == (1, {1: 2, 2: 3}, {})
    chain_l = (((None, None), None), None)
    t = fstree.levelwise_numbering(chain_l)
    assert (t.root, t.left, t.right) == (1, {1: 2, 2: 3}, {})
    t = fstree.levelwise_numbering(((None, None), (None, None)))
    assert (t.root, t.left, t.right) == (1, {1: 2}, {1: 3})


def labelings(shape):
    """Every labeling of the shape by 1..n, as FSTree."""
    slots = []

    def collect(node, rl):
        if node is None:
            return
        slots.append(rl)
        collect(node[0], rl + "l")
        collect(node[1], rl + "r")

    collect(shape, "")
    for perm in permutations(range(1, len(slots) + 1)):
        lab = dict(zip(slots, perm))
        left = {lab[s]: lab[s + "l"] for s in slots if s + "l" in lab}
        right = {lab[s]: lab[s + "r"] for s in slots if s + "r" in lab}
        yield FSTree(lab[""], left, right)


def tree_key(t):
    return (t.root, sorted(t.left.items()), sorted(t.right.items()))


@pytest.mark.parametrize("n", range(1, 7))
def test_levelwise_numbering_is_unique(n):
    for shape in fstree.shapes(n):
        passing = [t for t in labelings(shape) if fstree.is_levelwise_numbered(t)]
        assert len(passing) == 1
        assert tree_key(passing[0]) == tree_key(fstree.levelwise_numbering(shape))
        assert literal_levelwise(passing[0])


@pytest.mark.parametrize("n", range(0, 8))
def test_shapes_count_and_roundtrip(n):
    all_shapes = list(fstree.shapes(n))
    assert len(all_shapes) == len(set(all_shapes)) == math.comb(2 * n, n) // (n + 1)
    for s in all_shapes:
        assert fstree.shape_from_json(fstree.shape_to_json(s)) == s
        if n:
            t = fstree.levelwise_numbering(s)
            assert t.shape() == s
            # in-order reading rebuilds the same tree
            assert tree_key(build(unbuild(t))) == tree_key(t)


def test_k_condition_examples():
    assert fstree.k_condition(build([3, 1, 2]), 2)
    assert fstree.k_condition(build([1, 2]), 3)
    assert not fstree.k_condition(build([1]), 3)
    assert fstree.right_chains(build([2, 1, 3])) == [[1, 3], [2]]


def test_json_roundtrip():
    t = build(K4_SHORT)
    assert tree_key(FSTree.from_json(t.to_json())) == tree_key(t)
    assert t.to_json()["label"] == 1
    assert build([]).to_json() is None


@given(st.permutations(list(range(1, 10))))
def test_subtree_labels_exceed_root(w):
    t = build(w)
    for v in w:
        assert all(u >= v for u in t.subtree(v))
