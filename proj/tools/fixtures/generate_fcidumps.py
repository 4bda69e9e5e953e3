# Copyright 2026 The molpea Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerate the FCIDUMP fixtures under data/fcidump with PySCF.

RHF canonical orbitals, no frozen core, no point-group symmetry.
Prints nuclear repulsion, electronic HF and electronic FCI energies so the
shipped values can be compared against the C++ diagonalization.

    pip install pyscf
    python3 tools/fixtures/generate_fcidumps.py data/fcidump
"""
import math
import sys
from pathlib import Path

from pyscf import ao2mo, fci, gto, scf
from pyscf.tools import fcidump


def generate(atom, basis, path):
    mol = gto.M(atom=atom, basis=basis, unit="Angstrom", verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    h1 = mf.mo_coeff.T @ mf.get_hcore() @ mf.mo_coeff
    eri = ao2mo.kernel(mol, mf.mo_coeff)
    solver = fci.direct_spin1.FCI()
    solver.conv_tol = 1e-13
    e_fci, _ = solver.kernel(h1, eri, mol.nao, mol.nelectron)
    e_nuc = mol.energy_nuc()
    print(f"{path.name}: norb={mol.nao} nelec={mol.nelectron} "
          f"E_nuc={e_nuc:.10f} E_hf(el)={mf.e_tot - e_nuc:.10f} "
          f"E_fci(el)={e_fci:.10f}")
    fcidump.from_scf(mf, str(path), tol=1e-14)


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/fcidump")
    out.mkdir(parents=True, exist_ok=True)
    half = math.radians(104.51) / 2
    r = 0.9576
    water = (f"O 0 0 0; H {r * math.sin(half)} {r * math.cos(half)} 0; "
             f"H {-r * math.sin(half)} {r * math.cos(half)} 0")
    generate(water, "sto-3g", out / "h2o_sto3g.fcidump")
    generate("Li 0 0 0; H 0 0 1.40", "6-31g", out / "lih_631g.fcidump")
    for d in (0.74, 1.0, 1.5, 2.0, 2.5):
        generate(f"H 0 0 0; H 0 0 {d}", "sto-3g", out / f"h2_sto3g_r{d:.2f}.fcidump")


if __name__ == "__main__":
    main()
