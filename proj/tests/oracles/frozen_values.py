"""Arbitrary-precision reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/frozen_values.py`. Every number printed here is
computed with mpmath at 50 significant digits straight from the closed forms,
independently of the C++ implementation.
"""
import mpmath as mp

mp.mp.dps = 50
E = mp.e


def normal_tail(t):
    return mp.erfc(mp.mpf(t) / mp.sqrt(2)) / 2


def gamma_budget(t, b, c=1):
    t, b = mp.mpf(t), mp.mpf(b)
    return c * (t / b) ** 3 * mp.exp(2 * (c - b) * (t / b) ** 2)


def center(t, tau, b, c=1):
    t, tau, b = mp.mpf(t), mp.mpf(tau), mp.mpf(b)
    g = gamma_budget(t, b, c)
    big_e = mp.exp(t**2 * (tau * (1 - tau) + 2 * (c - b) / b**2))
    beta = 1 + g**2 * ((1 - tau) ** 2 * t**2 / 2 + c * big_e / (tau**3 * b**3))
    mu = t * g * (1 - tau + c * big_e / (tau**2 * b**3))
    m2lo = 1 - (g / t) * (1 / tau + (1 - tau) * t**2)
    m2hi = 1 + g * mp.exp(tau * (1 - tau) * t**2) / (t * tau)
    d2 = 1 + m2lo - beta - mu**2
    alpha = [t ** (3 - k) * tau ** (-k) * mp.exp(-(1 - tau) ** 2 * t**2 / 2) for k in range(4)]
    big_delta = mp.exp(c / (tau**3 * b**3) * big_e)
    eta = mu * mp.sqrt(m2hi) * (3 * mp.sqrt(m2hi) + mu * mp.sqrt(beta))
    d = mp.sqrt(d2)
    b_center = (tau**-3 + alpha[3] * big_delta
                + mp.sqrt(2 / mp.pi) * (alpha[2] + alpha[1] * t / 4 * (mp.exp(-t**2 / 2) + mp.exp(-(d * t) ** 2 / 2)))
                + mp.mpf("1.531") * mp.sqrt(beta / (m2lo - beta * mu**2) ** 3)
                * (alpha[0] + eta * t**3 * mp.exp(-t**2 * (1 - tau**2) / 2)))
    b_tail = b**3 * (1 + E)
    return dict(gamma=g, beta_hi=beta, mu_hi=mu, m2_lo=m2lo, m2_hi=m2hi, delta2_lo=d2,
                big_delta=big_delta, eta=eta, b_center=b_center, b_tail=b_tail,
                cond22=(1 - tau) ** 2 * tau**3 * t**5 * mp.exp(-tau * (1 - tau) * t**2))


def show(label, value):
    print(f"{label:40s} {mp.nstr(value, 20)}")


for t in [0, 1, 2, "3.18", 5, 8, 10, 20, 40]:
    show(f"normal_tail({t})", normal_tail(mp.mpf(t)))

show("gamma(3.2, 1.9650)", gamma_budget("3.2", "1.9650"))
show("gamma(10, 1.1555)", gamma_budget(10, "1.1555"))
show("gamma(10, 1+1e-9)", gamma_budget(10, 1 + mp.mpf("1e-9")))

for key, value in center("3.2", "0.4587", "1.9650").items():
    show(f"center(3.2).{key}", value)

s, h, rho = mp.mpf("0.5"), mp.mpf(2), mp.mpf("1.5")
show("envelope(0.5,2,1.5).beta_hi", 1 + s**2 / 2 + rho / h**3 * (mp.exp(s * h) - 1))
show("envelope(0.5,2,1.5).m1_hi", s + rho / h**2 * mp.exp(s * h))
show("envelope(0.5,2,1.5).m1_lo", s - rho / h**2 * (1 + s * h + (s * h) ** 2 / 2))

b = mp.mpf("1.6269")
show("psi(100,5,b^3,1.6269,1,1)", b**2 / (2 * (b - 1)) * mp.log(10 * 125 / b**3))

t = mp.mpf("3.2")
show("tau_hi(3.2)", min((1 + mp.sqrt(1 - 10 / t**2)) / 2, 1 - mp.sqrt(3) / t))
show("b_lo(3.2)", 2 * t / (t + mp.sqrt(t**2 - 6)))
show("b_hi", mp.cbrt(30 / (1 + E)))
t, b = mp.mpf(10), mp.mpf("1.1555")
p = 2 * (b - 1) / b**2 - 1 / t**2
show("tau1(10, 1.1555)", (1 + mp.sqrt(1 - 4 * p)) / 2)

show("ci(100, 0.5, C=16.0240)", 2 * (normal_tail(5) + mp.mpf("16.0240") / 1250))
