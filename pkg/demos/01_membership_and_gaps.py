"""
Sums of two squares: membership certificates and gap records
=============================================================

A number n is a sum of two squares exactly when every prime p with
p % 4 == 3 divides n to an even power.  The package turns that criterion
into verifiable certificates in both directions: a witness pair (x, y)
for members, a structural certificate for non-members.
"""

from twosquare_gaps import classify, membership_sieve, scan_records

# classify() factors its argument and returns a verdict object.
# Members carry a witness pair.
for n in [1, 2, 25, 3, 6, 21, 88135877101042]:
    verdict = classify(n)
    print(f"{n}: {verdict}")

# The witness really is a decomposition.
verdict = classify(88135877101042)
print(f"check: {verdict.x}**2 + {verdict.y}**2 =", verdict.x**2 + verdict.y**2)

# Non-member certificates can be replayed against the raw integer
# without redoing the factorization.
verdict = classify(21)
print("21 is out because:", verdict.certificate)
print("certificate replays:", verdict.certificate.holds_for(21))

# For bulk work the sieve marks a whole window at once. Here are the
# members up to 30; compare with any table of sums of two squares.
hits = membership_sieve(1, 30)
print("members up to 30:", [int(i) + 1 for i in hits.nonzero()[0]])

# scan_records walks the members in order and keeps every gap that
# beats all earlier ones.  The largest known gaps grow like a power of
# log, so records get sparse quickly.
print()
print("gap records up to 10**5:")
print(f"{'from':>8} {'to':>8} {'gap':>5} {'gap/ln':>8}")
for rec in scan_records(10**5):
    print(f"{rec.s_prev:>8} {rec.s_next:>8} {rec.gap:>5} {rec.ratio:>8.3f}")
