from src.ideal import IdealHandle


def ideal_of(curve, *polys):
    return IdealHandle(curve, [curve.parse(p) for p in polys])
