"""Generate frozen oracle values for the test suite with mpmath at 40 digits.

Run manually; paste the printed literals into the tests. Every closed form here
is evaluated straight from its defining formula (digamma/trigamma/loggamma of
the root combinations, Richardson-accelerated Matsubara sums via mp.nsum, direct
mpmath quadrature of the spectral integrals), independent of the library code.
"""

import mpmath as mp

mp.mp.dps = 40


def show(label, value):
    if isinstance(value, mp.mpc):
        print(f"{label} = complex({mp.nstr(value.real, 25)}, {mp.nstr(value.imag, 25)})")
    else:
        print(f"{label} = {mp.nstr(value, 25)}")


# ---------------------------------------------------------------- specfun
show("ln_gamma(3.7+2.1j)", mp.loggamma(mp.mpc("3.7", "2.1")))
show("digamma(0.5+5j)", mp.psi(0, mp.mpc("0.5", "5")))
show("trigamma(2.5-1.3j)", mp.psi(1, mp.mpc("2.5", "-1.3")))
show("g(10)", mp.loggamma(11) - 10 * mp.psi(0, 11))
show("g(0.8+0.3j)", mp.loggamma(mp.mpc("1.8", "0.3"))
     - mp.mpc("0.8", "0.3") * mp.psi(0, mp.mpc("1.8", "0.3")))


# ------------------------------------------------------------- oscillator
def lam_pm(theta, alpha):
    s = 1 / (2 * mp.pi * theta)
    half = alpha / 2
    root = mp.sqrt(mp.mpc(half * half - 1))
    return s * (half + root), s * (half - root)


def c_damped(theta, alpha):
    lp, lm = lam_pm(theta, alpha)
    a = alpha / (2 * mp.pi * theta)
    val = 1 - a + lp**2 * mp.psi(1, 1 + lp) + lm**2 * mp.psi(1, 1 + lm)
    assert abs(mp.im(val)) < mp.mpf("1e-30")
    return mp.re(val)


def s_damped(theta, alpha):
    lp, lm = lam_pm(theta, alpha)
    a = alpha / (2 * mp.pi * theta)

    def g(z):
        return mp.loggamma(1 + z) - z * mp.psi(0, 1 + z)

    val = 1 + mp.log(theta) + a + g(lp) + g(lm)
    assert abs(mp.im(val)) < mp.mpf("1e-30")
    return mp.re(val)


def e_reg_osc(theta, alpha):
    # term-wise gamma/nu subtraction + fixed-frequency-cutoff compensator,
    # reference frequency omega_0
    lp, lm = lam_pm(theta, alpha)
    a = alpha / (2 * mp.pi * theta)
    val = theta * (1 - lp * mp.psi(0, 1 + lp) - lm * mp.psi(0, 1 + lm)
                   + a * mp.log(1 / (2 * mp.pi * theta)))
    assert abs(mp.im(val)) < mp.mpf("1e-30")
    return mp.re(val)


for th, al in [(1, 1), (0.5, 2), (2, 5), (0.01, 1)]:
    show(f"C_damped({th},{al})", c_damped(mp.mpf(th), mp.mpf(al)))
for th, al in [(1, 1), (0.2, 0.5), (1000, 1)]:
    show(f"S_damped({th},{al})", s_damped(mp.mpf(th), mp.mpf(al)))
show("E_reg_osc(1,1)", e_reg_osc(mp.mpf(1), mp.mpf(1)))

x = mp.mpf(1)  # 1/theta at theta=1
show("undamped C(1)", (x / (2 * mp.sinh(x / 2))) ** 2)
show("undamped E(1)", x / x / 2 + 1 / mp.expm1(x))  # hbar*omega0 units
show("undamped S(1)", x / mp.expm1(x) - mp.log(-mp.expm1(-x)))
show("undamped Z(1)", 1 / (2 * mp.sinh(x / 2)))


# ---------------------------------------------------------- free particle
def c_free_ohmic(theta):
    a = 1 / (2 * mp.pi * theta)
    return mp.mpf(1) / 2 - a + a * a * mp.psi(1, 1 + a)


def z_pm(theta, r):
    s = mp.sqrt(mp.mpc(1 - 4 / r))
    z0 = r / (4 * mp.pi * theta)
    return z0 * (1 + s), z0 * (1 - s), s, z0


def c_free_drude(theta, r):
    a = 1 / (2 * mp.pi * theta)
    zp, zm, s, z0 = z_pm(theta, r)
    if abs(s) < mp.mpf("1e-20"):
        bracket_over_s = 2 * z0 * (mp.psi(1, 1 + z0) + z0 * mp.psi(2, 1 + z0))
    else:
        bracket_over_s = (zp * mp.psi(1, 1 + zp) - zm * mp.psi(1, 1 + zm)) / s
    val = mp.mpf(1) / 2 - a * bracket_over_s
    assert abs(mp.im(val)) < mp.mpf("1e-30")
    return mp.re(val)


def e_reg_free(theta):
    a = 1 / (2 * mp.pi * theta)
    return theta / 2 - mp.psi(0, 1 + a) / (2 * mp.pi) + mp.log(a) / (2 * mp.pi)


def e_free_drude(theta, r):
    zp, zm, s, z0 = z_pm(theta, r)
    val = theta / 2 + (mp.psi(0, 1 + zp) - mp.psi(0, 1 + zm)) / (2 * mp.pi * s)
    assert abs(mp.im(val)) < mp.mpf("1e-30")
    return mp.re(val)


for th in [0.5, 2.0]:
    show(f"C_free_ohmic({th})", c_free_ohmic(mp.mpf(th)))
show("C_free_ohmic(1/2pi)", c_free_ohmic(1 / (2 * mp.pi)))
show("pi^2/6 - 3/2", mp.pi**2 / 6 - mp.mpf(3) / 2)
for th, r in [(0.5, 1.0), (1.0, 10.0), (0.5, 0.5), (0.5, 4.0)]:
    show(f"C_free_drude({th},{r})", c_free_drude(mp.mpf(th), mp.mpf(r)))
show("E_reg_free(0.5)", e_reg_free(mp.mpf("0.5")))
show("E_free_drude(0.5,1)", e_free_drude(mp.mpf("0.5"), mp.mpf(1)))
show("q2_undamped(1)", mp.coth(mp.mpf(1) / 2) / 2)


# -------------------------------------------------- matsubara brute sums
def sum_em(f):
    # Richardson-accelerated nsum; mp.sumem underestimates these 1/n^2 tails
    # by ~1e-4 at default settings (checked against exact digamma closed forms)
    return mp.nsum(f, [1, mp.inf])


def drude_osc_sum(theta, alpha, r, partition):
    # oscillator scaling: omega_0 = 1, gamma = alpha, omega_D = r*alpha
    wd = r * alpha

    def term(n):
        nu = 2 * mp.pi * n * theta
        gh = alpha * wd / (nu + wd)
        ghp = -alpha * wd / (nu + wd) ** 2
        num = 2 + nu * gh
        if partition:
            num -= nu * nu * ghp
        return num / (nu * nu + nu * gh + 1)

    return theta * (1 + sum_em(term))


def drude_osc_gap(theta, alpha, r):
    wd = r * alpha

    def term(n):
        nu = 2 * mp.pi * n * theta
        gh = alpha * wd / (nu + wd)
        ghp = -alpha * wd / (nu + wd) ** 2
        return -nu * nu * ghp / (nu * nu + nu * gh + 1)

    return theta * sum_em(term)


def drude_free_sum(theta, r):
    # free-particle scaling: gamma = 1, omega_D = r
    def term(n):
        nu = 2 * mp.pi * n * theta
        gh = r / (nu + r)
        return gh / (nu + gh)

    return (theta / 2) * (1 + 2 * sum_em(term))


def q2_matsubara(theta, alpha):
    def term(n):
        nu = 2 * mp.pi * n * theta
        return 1 / (nu * nu + nu * alpha + 1)

    return theta * (1 + 2 * sum_em(term))


ee = drude_osc_sum(mp.mpf(1), mp.mpf(1), mp.mpf(10), False)
ez = drude_osc_sum(mp.mpf(1), mp.mpf(1), mp.mpf(10), True)
gap = drude_osc_gap(mp.mpf(1), mp.mpf(1), mp.mpf(10))
show("E_drude_osc_energy(1,1,r10)", ee)
show("E_drude_osc_partition(1,1,r10)", ez)
show("gap_drude_osc(1,1,r10)", gap)
print("# gap identity residual:", mp.nstr(abs(ez - ee - gap), 5))

ef = drude_free_sum(mp.mpf("0.5"), mp.mpf(1))
show("E_drude_free_sum(0.5,r1)", ef)
print("# closed-vs-sum residual:", mp.nstr(abs(ef - e_free_drude(mp.mpf("0.5"), mp.mpf(1))), 5))

q2m = q2_matsubara(mp.mpf(1), mp.mpf(1))
show("q2_matsubara(1,1)", q2m)


# ----------------------------------------------------- spectral integrals
def f0_quad(theta, alpha):
    def ig(w):
        den = (w * w - 1) ** 2 + alpha * alpha * w * w
        return alpha * w * mp.coth(w / (2 * theta)) / den / mp.pi

    return mp.quad(ig, [0, 1, 2, mp.inf])


def f2_reg_quad(theta, alpha):
    def ig(w):
        den = (w * w - 1) ** 2 + alpha * alpha * w * w
        bose = 2 / mp.expm1(w / theta)
        return alpha * w**3 * bose / den / mp.pi

    return mp.quad(ig, [0, 1, 2, mp.inf])


f0 = f0_quad(mp.mpf(1), mp.mpf(1))
f2r = f2_reg_quad(mp.mpf(1), mp.mpf(1))
show("f0_quad(1,1)", f0)
show("f2_reg_quad(1,1)", f2r)
print("# f0 vs q2_matsubara residual:", mp.nstr(abs(f0 - q2m), 5))
show("f0_quad(0.5,2)", f0_quad(mp.mpf("0.5"), mp.mpf(2)))
show("f2_reg_quad(0.5,2)", f2_reg_quad(mp.mpf("0.5"), mp.mpf(2)))


# ------------------------------------------ misc reference constants
show("euler_gamma", mp.euler)
show("pi^2/6", mp.pi**2 / 6)
show("pi^2/2", mp.pi**2 / 2)
show("0.5*ln(pi)", mp.log(mp.pi) / 2)
show("ln(2pi)/2", mp.log(2 * mp.pi) / 2)
