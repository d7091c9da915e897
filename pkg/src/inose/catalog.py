"""Worked examples of degree 5 and 6 with their expected intermediate values.

Polynomials are stored as ascending coefficient lists.  ``p_plus`` is given
as pairs ``(a, b)`` meaning the x1**k coefficient ``a + b*u**3``.  The
section is ``X = f / (192 h**2)`` and ``Y = y_factor * g / (512 h**3)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import RatFunc, UniPoly, rational
from .elliptic import EllipticCurve, RationalMap
from .plane import ProjPoint, TriPoly

_RAW = {
    "d5": dict(
        e1=(-4, 0, 16),
        e2=(-4, -160, -1264),
        phi=dict(
            x_num=[1024, -512, 0, 48, -8, 1],
            x_den=[0, 0, 16, -8, 1],
            y_num=[8192, -6144, 1536, -192, 16, -12, 1],
            y_den=[0, 0, 0, -64, 48, -12, 1],
            degree=5,
        ),
        A=7936, B="-389275648/27", delta1=-45056, delta2=-659664896,
        p_plus=[(8192, 0), (-6144, 0), (1536, 0), (-192, 64), (16, -48), (-12, 12), (1, -1)],
        obar=([2501, 0, -372, 0, 0, 0, 31], [0, 0, 2129, 0, 0, 0, 12, 0, 19], [0, 0, -279, 0, 0, 0, 9]),
        y_factor=[-121, 1],
        curve={
            (0, 0, 3): [-601920, 601920, -291456, 23488, 40896, -19456, -3008, 7104, -4480, 1344, -192],
            (0, 1, 2): [1760, -1760, 7392, -10464, 6272, -832, -288, 352, -160, 32],
            (0, 2, 1): [7128, -7128, 2992, -16, -576, 400, -136, 24],
            (1, 0, 2): [-28864, 28864, -82544, 86576, -49088, 17424, -7888, 2816, -336, -48, 128, -80, 16],
            (1, 1, 1): [-12276, 12276, -14344, 15988, -10268, 2912, 132, -644, 360, -100, 12],
            (1, 2, 0): [-2068, 2068, -572, -428, 472, -260, 80, -12],
            (2, 0, 1): [-5324, 5324, 12144, -12540, 5676, -6032, 7372, -4572, 1488, -212, -124, 80, -16],
            (2, 1, 0): [3993, -3993, 4136, -3839, 2299, -596, -101, 193, -100, 27, -3],
            (3, 0, 0): [0, 0, -3993, 3993, -2068, 1771, -1727, 1024, -371, 67, 20, -15, 3],
        },
        f=[
            2018249984797680027603, 194918754081273106962, 7628511948299823559,
            156511003892745304, 1890896931056342, 16365054527404, 129150804662, 730135384,
            2430679, 4242, 3
        ],
        g=[
            144209936106499234037676064081, 22083100659160664074343947522,
            1504534724917202541777070395, 60571847938187268807626612,
            1616046206494303287179993, 30281648805286481009374, 408728770355092602107,
            3983998405505436120, 27916724974734827, 141266126525854, 514922124233,
            1318219892, 2236395, 2242, 1
        ],
        h=[
            0, 8857805, 310123, 2563, 5
        ],
        q_x1=[
            -2357947691, 7073843073, -10737431221, 10464610827, -7015381560, 3061901612,
            -550150216, -303420084, 251665480, -29250056, -66858792, 50518468, -9637166,
            -11661738, 13121086, -7467922, 2708376, -525548, -59104, 86220, -30688, 3088,
            2376, -1540, 513, -111, 15, -1
        ],
        q_x2=[
            0, 0, -2357947691, 7073843073, -10815379905, 10698456879, -7372270576,
            3426521076, -845573652, -73258240, 58548028, 137728492, -202614016, 148448124,
            -70822202, 21451210, -2513478, -1042758, 458896, 107980, -177220, 83240, -16836,
            -3668, 4448, -1980, 573, -115, 15, -1
        ],
        q_z=[
            0, 0, 0, 0, -58461513, 175384539, -266217303, 269116221, -201651824, 116100468,
            -50752361, 15333483, -1687103, -1427679, 1148136, -433224, 27621, 93985, -85821,
            48607, -20664, 6868, -1779, 345, -45, 3
        ],
    ),
    "d6": dict(
        e1=(1, -1, 0),
        e2=(1, -36, -140),
        phi=dict(
            x_num=[-1, 0, -5, 16, 5, 0, 1],
            x_den=[0, 1, 0, -2, 0, 1],
            y_num=[-1, 0, 10, -32, 0, -32, -10, 0, 1],
            y_den=[0, 0, -1, 0, 3, 0, -3, 0, 1],
            degree=6,
        ),
        A=436, B="-1215808/27", delta1=80, delta2=-4000000,
        p_plus=[(-1, 0), (0, 0), (10, 1), (-32, 0), (0, -3), (-32, 0), (-10, 3), (0, 0), (1, -1)],
        obar=None,
        y_factor=[-50000, 0, -1],
        curve={
            (0, 0, 3): [-1200, 0, 0, -40, 0, 0, -4],
            (0, 1, 2): [-180, 0, 0, 32, 0, 0, -1],
            (0, 2, 1): [40, 0, 0, 4],
            (1, 0, 2): [2600, 0, 0, 340, 0, 0, 10, 0, 0, -1],
            (1, 1, 1): [40, 0, 0, 76],
            (1, 2, 0): [-120, 0, 0, 12],
            (2, 0, 1): [0, 0, 0, -200, 0, 0, 40],
            (2, 1, 0): [-500, 0, 0, -60, 0, 0, 5],
            (3, 0, 0): [1000, 0, 0, -340, 0, 0, 2, 0, 0, 1],
        },
        f=[
            46875000000000000000000000000, 3615000000000000000000000000,
            101877400000000000000000000, 1209738400000000000000000, 5728337104000000000000,
            54228893440000000000, 702031826176000000, -1084577868800000, 2291334841600,
            -9677907200, 16300384, -11568, 3
        ],
        g=[
            39062500000000000000000000000000000000, 4518750000000000000000000000000000000,
            213687000000000000000000000000000000, 5212487000000000000000000000000000,
            64613401504000000000000000000000, 184205916921600000000000000000,
            -6067093967232000000000000000, -83017896857605120000000000,
            -221006891984578560000000, 1660357937152102400000, -2426837586892800000,
            -1473647335372800, 10338144240640, -16679958400, 13675968, -5784, 1
        ],
        h=[
            0, 92500000000, 2588000000, 8556000, -51760, 37
        ],
        q_x1=[
            500000000, 0, 0, -380000000, 0, 0, 20200000, 0, 0, -6992000, 0, 0, 204400, 0, 0,
            -1520, 0, 0, 44
        ],
        q_x2=[
            -7000000000, 0, 0, 140000000, 0, 0, -199600000, 0, 0, 3688000, 0, 0, -543200, 0,
            0, -147440, 0, 0, 8024, 0, 0, 44, 0, 0, -4
        ],
        q_z=[
            -1000000000, 0, 0, 20000000, 0, 0, -27800000, 0, 0, -16000, 0, 0, -127600, 0, 0,
            28880, 0, 0, -228, 0, 0, -48, 0, 0, 1
        ],
    ),
}


@dataclass(frozen=True)
class WorkedExample:
    name: str
    e1: EllipticCurve
    e2: EllipticCurve
    phi: RationalMap
    A: object
    B: object
    delta1: object
    delta2: object
    p_plus: UniPoly
    origin_bar: ProjPoint | None
    curve_plus: TriPoly
    ninth_plus: ProjPoint
    section_x: RatFunc
    section_y: RatFunc

    @property
    def degree(self) -> int:
        return self.phi.degree

    @property
    def height(self) -> int:
        return 2 * self.phi.degree


def _upoly(coeffs, var="u") -> UniPoly:
    return UniPoly(coeffs, var)


def _build(name: str, raw: dict) -> WorkedExample:
    u3 = UniPoly.monomial(1, 3, "u")
    p_plus = UniPoly._make([u3 * b + UniPoly.const(a, "u") for a, b in raw["p_plus"]], "x1")
    obar = ProjPoint(*(_upoly(c) for c in raw["obar"])) if raw["obar"] else None
    curve = TriPoly(3, {k: _upoly(v) for k, v in raw["curve"].items()})
    f, g, h = (_upoly(raw[k], "s") for k in "fgh")
    return WorkedExample(
        name=name,
        e1=EllipticCurve(*raw["e1"]),
        e2=EllipticCurve(*raw["e2"]),
        phi=RationalMap.from_coefficients(**raw["phi"]),
        A=rational(raw["A"]), B=rational(raw["B"]),
        delta1=rational(raw["delta1"]), delta2=rational(raw["delta2"]),
        p_plus=p_plus,
        origin_bar=obar,
        curve_plus=curve,
        ninth_plus=ProjPoint(_upoly(raw["q_x1"]), _upoly(raw["q_x2"]), _upoly(raw["q_z"])),
        section_x=RatFunc(f, h * h * 192),
        section_y=RatFunc(_upoly(raw["y_factor"], "s") * g, h ** 3 * 512),
    )


EXAMPLES = tuple(_RAW)


def example(name: str) -> WorkedExample:
    """The embedded example ``"d5"`` or ``"d6"``."""
    try:
        raw = _RAW[name]
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {EXAMPLES}") from None
    return _build(name, raw)


def two_isogeny(a, b):
    """The 2-isogeny with kernel ``(0, 0)`` from ``y² = x³ + ax² + bx``.

    Classical quotient formulas: the target is ``y² = x³ - 2ax² + (a² - 4b)x``
    and ``phi(x, y) = (y²/x², y(b - x²)/x²)``.  Returns ``(E1, E2, phi)``.
    """
    a, b = rational(a), rational(b)
    e1 = EllipticCurve(a, b, 0)
    e2 = EllipticCurve(-2 * a, a * a - 4 * b, 0)
    phi = RationalMap.from_coefficients([b, a, 1], [0, 1], [b, 0, -1], [0, 0, 1], 2)
    return e1, e2, phi
