"""Pure-Python membership kernel, same contract as the compiled one."""

BACKEND = "python"


def is_combination(gens, target, cuts=()):
    """Is ``target`` a nonnegative integer combination of ``gens``?

    Depth-first search over residuals, generators tried in the given order;
    ``cuts`` prune residuals with a negative pairing.  Never returns None.
    """
    target = tuple(target)
    if any(x < 0 for x in target):
        return False
    if not any(target):
        return True
    usable = [tuple(g) for g in gens if all(a <= b for a, b in zip(g, target))]
    if not usable:
        return False
    cuts = [tuple(h) for h in cuts]
    seen = {target}
    stack = [target]
    while stack:
        r = stack.pop()
        for g in reversed(usable):
            child = tuple(a - b for a, b in zip(r, g))
            if min(child) < 0 or child in seen:
                continue
            if any(sum(a * x for a, x in zip(h, child)) < 0 for h in cuts):
                continue
            if not any(child):
                return True
            seen.add(child)
            stack.append(child)
    return False
