"""Walk through the w-core inverse and its order on a small 2x2 triple.

Run with ``python3 demos/wcore_walkthrough.py``.
"""

from wcore.geninv import core_inverse, inverse_along, w_core_inverse, w_core_via_product
from wcore.matrix import Matrix
from wcore.orders import OrderKind, order_holds, w_core_characterizations
from wcore.scalar import GAUSSIAN_RATIONALS


def show(label, m):
    print(f"{label:>12} = {m.to_strings()}")


a = Matrix(GAUSSIAN_RATIONALS, [[1, 1], [0, 0]])
b = Matrix(GAUSSIAN_RATIONALS, [[1, 1], [2, -2]])
w = Matrix(GAUSSIAN_RATIONALS, [[1, 0], [1, 0]])

# The w-core inverse is built from the inverse of w along a and a {1,3}-inverse of a.
x = w_core_inverse(a, w)
show("w^||a", inverse_along(w, a))
show("a_w", x)
show("(aw) core", w_core_via_product(a, w))
show("a core", core_inverse(a))

# b has no w-core inverse (bw has rank 1), so the order is read with only a's inverse.
rep = order_holds(OrderKind.WCORE, a, b, w, mode="relaxed")
print("\nw-core order:", rep.holds)
for name, ok in rep.conditions:
    print(f"  {name}: {ok}")

core = order_holds(OrderKind.CORE, a, b)
print("core order:", core.holds, "failed at", core.failed_condition)

print("\nequivalent conditions:")
for name, ok in w_core_characterizations(a, b, w):
    print(f"  ({name}) {ok}")
