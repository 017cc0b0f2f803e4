"""Generate a small triangulation of RP^3.

Starts from the antipodal quotient of the barycentric subdivision of the
boundary of the 4-dimensional cross-polytope and applies PL moves (edge
contractions under the link condition, 2-3 and 3-2 bistellar flips) until
the vertex count stops decreasing.  Prints the facet list as JSON.
"""
import itertools
import json
import random
import sys


def cross_polytope_sd_quotient():
    # vertices of the cross-polytope: (axis, sign)
    verts = [(a, s) for a in range(4) for s in (1, -1)]
    facets = [tuple((a, s[a]) for a in range(4)) for s in itertools.product((1, -1), repeat=4)]
    faces = set()
    for f in facets:
        for k in range(1, 5):
            for c in itertools.combinations(f, k):
                faces.add(frozenset(c))

    def neg(face):
        return frozenset((a, -s) for a, s in face)

    # representative per antipodal pair
    reps = {}
    for f in sorted(faces, key=lambda x: sorted(x)):
        key = min(f, neg(f), key=lambda x: sorted(x))
        reps[f] = key
    ids = {}
    for key in sorted(set(reps.values()), key=lambda x: (len(x), sorted(x))):
        ids[key] = len(ids)
    tets = set()
    for f in facets:
        for perm in itertools.permutations(f):
            chain = [frozenset(perm[:k]) for k in range(1, 5)]
            tets.add(frozenset(ids[reps[c]] for c in chain))
    return tets


def closure(tets):
    faces = set()
    for t in tets:
        for k in range(1, len(t) + 1):
            for c in itertools.combinations(sorted(t), k):
                faces.add(frozenset(c))
    return faces


class Complex:
    def __init__(self, tets):
        self.tets = set(tets)

    def faces(self):
        return closure(self.tets)

    def vertices(self):
        return set().union(*self.tets)

    def try_contract(self, a, b, faces):
        # link condition: every simplex s with s+a, s+b in K has s+a+b in K
        for s in faces:
            if a in s or b in s:
                continue
            if (s | {a}) in faces and (s | {b}) in faces and (s | {a, b}) not in faces:
                return False
        new = set()
        for t in self.tets:
            if a in t and b in t:
                continue
            if b in t:
                t = (t - {b}) | {a}
            new.add(frozenset(t))
        self.tets = new
        return True

    def flip23(self, tri, faces):
        cof = [t for t in self.tets if tri <= t]
        if len(cof) != 2:
            return False
        d = next(iter(cof[0] - tri))
        e = next(iter(cof[1] - tri))
        if frozenset({d, e}) in faces:
            return False
        for t in cof:
            self.tets.remove(t)
        a, b, c = sorted(tri)
        for x, y in ((a, b), (b, c), (a, c)):
            self.tets.add(frozenset({x, y, d, e}))
        return True

    def flip32(self, edge, faces):
        cof = [t for t in self.tets if edge <= t]
        if len(cof) != 3:
            return False
        link = set().union(*cof) - edge
        if frozenset(link) in faces:
            return False
        for t in cof:
            self.tets.remove(t)
        d, e = sorted(edge)
        self.tets.add(frozenset(link | {d}))
        self.tets.add(frozenset(link | {e}))
        return True


def reduce(tets, seed, rounds=4000):
    rng = random.Random(seed)
    K = Complex(tets)
    best = set(K.tets)
    for _ in range(rounds):
        faces = K.faces()
        edges = [f for f in faces if len(f) == 2]
        rng.shuffle(edges)
        done = False
        for e in edges:
            a, b = sorted(e)
            if rng.random() < 0.5:
                a, b = b, a
            if K.try_contract(a, b, faces):
                done = True
                break
        if not done:
            faces = K.faces()
            if rng.random() < 0.5:
                cands = [f for f in faces if len(f) == 2]
                rng.shuffle(cands)
                for c in cands:
                    if K.flip32(c, faces):
                        break
            else:
                cands = [f for f in faces if len(f) == 3]
                rng.shuffle(cands)
                for c in cands:
                    if K.flip23(c, faces):
                        break
        if len(K.vertices()) < len(set().union(*best)) or (
            len(K.vertices()) == len(set().union(*best)) and len(K.tets) < len(best)
        ):
            best = set(K.tets)
        if len(set().union(*best)) <= 11 and len(best) <= 40:
            break
    return best


if __name__ == "__main__":
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 1
    tets = cross_polytope_sd_quotient()
    best = reduce(tets, seed)
    verts = sorted(set().union(*best))
    relabel = {v: i for i, v in enumerate(verts)}
    out = sorted(sorted(relabel[v] for v in t) for t in best)
    print(json.dumps({"vertices": len(verts), "facets": out}))
