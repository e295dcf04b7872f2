"""
How much does halving buy?
==========================

Efficiency here is Y / ln(last interval element): how long an excluded
interval you get per unit of log-height.  The plain construction tends
toward 1/4, the halved one toward 1/2, so their ratio should drift
toward 2.  At desk scale the small primes (kept at full exponent) still
carry 13-15% of ln(modulus), which caps the measured ratio near 1.78.
"""

import math

from twosquare_gaps import (
    GAP_RATE_HALVED,
    GAP_RATE_PLAIN,
    efficiency_report,
    modulus_growth,
    richards_construction,
    small_prime_contribution,
)

print("efficiency at delta = 1/2")
print(f"{'Y':>4} {'ln(plain)':>10} {'ln(halved)':>11} "
      f"{'e_plain':>8} {'e_halved':>9} {'ratio':>7}")
for y, ln_p, ln_h, e_p, e_h, ratio in efficiency_report([10, 20, 50, 100]):
    print(f"{y:>4} {ln_p:>10.2f} {ln_h:>11.2f} "
          f"{e_p:>8.4f} {e_h:>9.4f} {ratio:>7.4f}")

# The ratio stalls below 1.8 because the small-prime share of
# ln(modulus) is untouched by halving.
print()
print("small-prime share of ln(modulus), eps = 1/2:")
for y in [10, 20, 50, 100, 200, 500]:
    share = small_prime_contribution(richards_construction(y), 0.5)
    print(f"  Y = {y:>3}: {share:.4f}")

# ln(modulus)/Y hovers around 4: the modulus costs about e**(4Y) to
# exclude Y integers, which is where the asymptotic rates below come
# from.
print()
print("modulus growth ln(value)/Y:")
for y in [50, 100, 200, 300, 400, 500]:
    print(f"  Y = {y:>3}: {modulus_growth(y):.4f}")

print()
print("asymptotic gap rates (gap >= rate * ln X along the construction):")
print(f"  plain:  {GAP_RATE_PLAIN} = {float(GAP_RATE_PLAIN):.6f}")
print(f"  halved: {GAP_RATE_HALVED} = {float(GAP_RATE_HALVED):.6f}")
print(f"  ratio of rates: {float(GAP_RATE_HALVED / GAP_RATE_PLAIN)}")

# The rates translate into a guaranteed gap floor at height X: somewhere
# below X there is a member-free stretch of about rate * ln X integers.
# A record scan (demo 01) finds much larger gaps at small X, but those
# come with no guarantee of continuing.
print()
print("guaranteed gap floor near X = 1e12:",
      round(math.log(1e12) * float(GAP_RATE_HALVED), 2))
