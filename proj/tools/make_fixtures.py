#!/usr/bin/env python3
# Copyright 2026 The Hyperion Desk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

# Regenerates the FCIDUMP fixtures under data/ and their reference energies.
#
# Geometries: linear hydrogen chains along z, STO-3G, restricted Hartree-Fock
# canonical orbitals (orbital-energy ordered). H2 uses the experimental bond
# length 0.7414 A; H4 and H6 use a uniform 1.0 A spacing.
#
# Requires PySCF. The generated files are committed, so the C++ build never
# needs a chemistry toolchain.

import json
import pathlib

from pyscf import fci, gto, scf
from pyscf.tools import fcidump

HERE = pathlib.Path(__file__).resolve().parent.parent / "data"

SYSTEMS = {
    "h2": 0.7414,
    "h4": 1.0,
    "h6": 1.0,
}


def chain(n_atoms, spacing):
    return "; ".join(f"H 0 0 {i * spacing:.6f}" for i in range(n_atoms))


def main():
    refs = {}
    for name, spacing in SYSTEMS.items():
        n_atoms = int(name[1:])
        mol = gto.M(atom=chain(n_atoms, spacing), basis="sto-3g", unit="angstrom", verbose=0)
        mf = scf.RHF(mol)
        mf.conv_tol = 1e-12
        mf.kernel()
        e_fci = fci.FCI(mf).kernel()[0]
        fcidump.from_scf(mf, str(HERE / f"{name}.fcidump"), tol=1e-15)
        refs[name] = {
            "atoms": n_atoms,
            "spacing_angstrom": spacing,
            "basis": "sto-3g",
            "norb": mol.nao,
            "nelec": mol.nelectron,
            "hf_energy": mf.e_tot,
            "fci_energy": e_fci,
        }
    (HERE / "references.json").write_text(json.dumps(refs, indent=2) + "\n")


if __name__ == "__main__":
    main()
