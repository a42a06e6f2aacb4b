"""Independent numpy reference for the frozen values in the C++ test suites.

Run with `python3 tests/oracle/reference_values.py`. Nothing here is imported
by the C++ build; the printed numbers are pasted into the tests by hand.
"""
import numpy as np

E_CHARGE, PLANCK = 1.602e-19, 6.626e-34          # four_digit preset
PHI0 = PLANCK / (2 * E_CHARGE)


def scales(L=4.5e-9, C=114e-15, Cq=70e-15, ejq=10.0, flux=0.0, gap_uev=100.0):
    ecq = E_CHARGE**2 / (PLANCK * (2 * Cq + C)) / 1e9
    ecr = E_CHARGE**2 / (PLANCK * C) / 1e9
    elr = (PHI0 / (2 * np.pi))**2 / (2 * L) / PLANCK / 1e9
    tuned = ejq * np.cos(np.pi * flux)
    return dict(ecq=ecq, ecr=ecr, elr=elr, ejq=tuned, es=tuned + elr,
                gap=gap_uev * 1e-6 * E_CHARGE / PLANCK / 1e9)


def fock(dim, energy_c, energy_l):
    a = np.diag(np.sqrt(np.arange(1, dim)), 1)
    pz = (2 * energy_c / energy_l)**0.25
    nz = 0.5 / pz
    return pz * (a + a.T), nz * 1j * (a.T - a), pz, nz


def funcm(m, f):
    w, v = np.linalg.eigh(m)
    return v @ np.diag(f(w)) @ v.conj().T


def transmon(s, dim, mode):
    phi, n, _, _ = fock(dim, s['ecq'], s['es'])
    h = 4 * s['ecq'] * n @ n
    if mode == 'quartic_ejq':
        h = h + s['es'] / 2 * phi @ phi - s['ejq'] / 24 * np.linalg.matrix_power(phi, 4)
    elif mode == 'quartic_ejstar':
        h = h + s['es'] / 2 * phi @ phi - s['es'] / 24 * np.linalg.matrix_power(phi, 4)
    elif mode == 'full_cosine':
        h = h + (s['es'] - s['ejq']) / 2 * phi @ phi - s['ejq'] * funcm(phi, np.cos)
    else:
        h = h + s['es'] / 2 * phi @ phi
    return h, phi, n


def report():
    s = scales()
    print('scales', s)
    print('omega_q', np.sqrt(8 * s['ecq'] * s['es']), 'omega_r', np.sqrt(8 * s['ecr'] * s['elr']))
    _, _, pzq, nzq = fock(3, s['ecq'], s['es'])
    _, _, pzr, nzr = fock(3, s['ecr'], s['elr'])
    print('zpf q', pzq, nzq, 'zpf r', pzr, nzr)
    print('g', -10.0 / 8 * 2 * pzq**2 * pzr)
    print('analytic', 4 * (s['ecq'] + s['ecr']), 4 * s['ecr'], (s['elr'] * s['ecr']**3 / 2)**0.25,
          (s['es'] * s['ecq']**3 / 2)**0.25, s['gap'] * np.sqrt(s['ecq'] / (32 * s['es'])),
          s['gap'] * np.sqrt(s['ecq'] / (8 * s['es'])))
    for cutoff in (5, 20):
        for mode in ('quartic_ejq', 'quartic_ejstar', 'full_cosine', 'harmonic'):
            h, phi, n = transmon(s, cutoff + 1, mode)
            w, v = np.linalg.eigh(h)
            v0, v1 = v[:, 0], v[:, 1]
            qg = 4 * s['ecq'] * 0.5 * abs(v0.conj() @ n @ v1)
            ch = funcm(phi, lambda x: np.cos(x / 2))
            fje = s['gap'] * abs((v1.conj() @ ch @ v1 - v0.conj() @ ch @ v0).real) / 2
            print(f'cutoff={cutoff:2d} {mode:15s} E0={w[0]:.10f} E01={w[1]-w[0]:.10f} '
                  f'anh={(w[2]-w[1])-(w[1]-w[0]):.10f} qgamma={qg:.10f} fjeC={fje:.10f}')
    _, phi, _ = transmon(s, 21, 'harmonic')
    ch = funcm(phi, lambda x: np.cos(x / 2))
    print('cos_half <0>-<1> / (pz^2/4)', (ch[0, 0] - ch[1, 1]).real / (pzq**2 / 4))
    for cutoff in (15, 20):
        h, _, _ = transmon(s, cutoff + 1, 'quartic_ejq')
        print('levels', cutoff, np.linalg.eigvalsh(h)[:3])


if __name__ == '__main__':
    np.set_printoptions(precision=12)
    report()
