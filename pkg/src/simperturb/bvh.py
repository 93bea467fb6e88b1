"""Axis-aligned bounding box hierarchy for candidate pair and ray queries.

Boxes are closed, so primitives whose boxes only touch are still reported;
the exact predicates decide what actually happens there.
"""

from __future__ import annotations

import numpy as np

_LEAF = 8


class BoxTree:
    """Median-split tree over boxes ``(xlo, ylo, xhi, yhi)``.

    Node ``i`` stores its box and either two children or a slice of
    ``order`` (the leaf's primitives).
    """

    def __init__(self, boxes):
        b = np.asarray(boxes, dtype=np.float64).reshape(-1, 4)
        self.boxes = b
        self.order = np.arange(len(b))
        self.lo: list[np.ndarray] = []
        self.hi: list[np.ndarray] = []
        self.children: list[tuple[int, int] | None] = []
        self.span: list[tuple[int, int]] = []
        if len(b):
            self._build(0, len(b))

    def _node(self, start, stop):
        sub = self.boxes[self.order[start:stop]]
        self.lo.append(sub[:, :2].min(axis=0))
        self.hi.append(sub[:, 2:].max(axis=0))
        self.children.append(None)
        self.span.append((start, stop))
        return len(self.lo) - 1

    def _build(self, start, stop):
        node = self._node(start, stop)
        if stop - start <= _LEAF:
            return node
        ext = self.hi[node] - self.lo[node]
        axis = 0 if ext[0] >= ext[1] else 1
        idx = self.order[start:stop]
        centers = self.boxes[idx, axis] + self.boxes[idx, axis + 2]
        self.order[start:stop] = idx[np.argsort(centers, kind="stable")]
        mid = (start + stop) // 2
        left = self._build(start, mid)
        right = self._build(mid, stop)
        self.children[node] = (left, right)
        return node

    def __len__(self):
        return len(self.boxes)

    def _overlap(self, i, tree, j):
        return bool(np.all(self.lo[i] <= tree.hi[j]) and np.all(tree.lo[j] <= self.hi[i]))

    def pairs(self, other: "BoxTree | None" = None) -> list[tuple[int, int]]:
        """Index pairs with overlapping boxes; with no ``other``, pairs i < j within self."""
        tree = self if other is None else other
        if not len(self) or not len(tree):
            return []
        out = set()
        boxes_a, boxes_b = self.boxes, tree.boxes
        stack = [(0, 0)]
        while stack:
            i, j = stack.pop()
            if not self._overlap(i, tree, j):
                continue
            ci, cj = self.children[i], tree.children[j]
            if ci is None and cj is None:
                s0, s1 = self.span[i]
                t0, t1 = tree.span[j]
                ia = self.order[s0:s1]
                ib = tree.order[t0:t1]
                a = boxes_a[ia][:, None, :]
                b = boxes_b[ib][None, :, :]
                hit = ((a[..., 0] <= b[..., 2]) & (b[..., 0] <= a[..., 2])
                       & (a[..., 1] <= b[..., 3]) & (b[..., 1] <= a[..., 3]))
                for p, q in zip(*np.nonzero(hit)):
                    x, y = int(ia[p]), int(ib[q])
                    if other is None:
                        if x == y:
                            continue
                        if x > y:
                            x, y = y, x
                    out.add((x, y))
            elif cj is None or (ci is not None and
                                self.span[i][1] - self.span[i][0] >= tree.span[j][1] - tree.span[j][0]):
                stack.append((ci[0], j))
                stack.append((ci[1], j))
            else:
                stack.append((i, cj[0]))
                stack.append((i, cj[1]))
        return sorted(out)

    def stab_y(self, y: float) -> list[int]:
        """Primitives whose box spans the horizontal line at ``y``."""
        if not len(self):
            return []
        out = []
        stack = [0]
        while stack:
            i = stack.pop()
            if not (self.lo[i][1] <= y <= self.hi[i][1]):
                continue
            c = self.children[i]
            if c is None:
                s0, s1 = self.span[i]
                idx = self.order[s0:s1]
                b = self.boxes[idx]
                out.extend(int(k) for k in idx[(b[:, 1] <= y) & (y <= b[:, 3])])
            else:
                stack.extend(c)
        return sorted(out)
