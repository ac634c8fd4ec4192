import logging

from blaschke_radius import BlaschkeProduct, NumericalRadiusSolver
from blaschke_radius.pick import critical_gamma, pick_closed_form_gamma

# Configure logging
logging.basicConfig(level=logging.WARNING)


def main():
    print("--- Blaschke Radius Demo ---")
    solver = NumericalRadiusSolver()

    # 1. The worked example: zeros {0, 1/2}
    b = BlaschkeProduct((0.0, 0.5))
    print("\n1. Numerical radius for zeros {0, 1/2}")
    for method in ("closed", "roots", "oracle"):
        result = solver.numerical_radius(b, method=method)
        print(f"   {method:>7}: {result.value:.15f}")

    # 2. Jordan blocks: w = cos(pi / (n + 1))
    print("\n2. Jordan blocks (all zeros at the origin)")
    for n in range(1, 6):
        result = solver.numerical_radius(BlaschkeProduct.power(0, n))
        print(f"   n={n}: {result.value:.12f} via {result.method.value}")

    # 3. ||I + t S_B|| three ways, and the closed-form Pick gamma
    print("\n3. ||I + t S_B|| for zeros {0, 1/2}")
    for t in (0.4, 0.1, 0.025):
        values = {m: solver.norm(b, t, method=m).value for m in ("svd", "pick", "ft")}
        closed = pick_closed_form_gamma(t)
        slope = (critical_gamma(b.zeros, t).value - 1.0) / t
        print(f"   t={t:<6} svd={values['svd']:.10f} pick={values['pick']:.10f} ft={values['ft']:.10f}")
        print(f"            closed form={closed:.10f}  (gamma - 1) / t = {slope:.6f}")

    # 4. Scattered zeros fall back to the eigenvalue oracle
    scattered = BlaschkeProduct((0.2 + 0.3j, -0.1, 0.5j))
    result = solver.numerical_radius(scattered)
    print(f"\n4. Scattered zeros: w = {result.value:.12f} via {result.method.value}")
    print(f"   argmax theta = {result.diagnostics['argmax_theta']:.6f}")


if __name__ == "__main__":
    main()
