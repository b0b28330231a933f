#!/usr/bin/env python3
"""
Beam-Splitter Entanglement Reproduction Launcher
Single command for every entropy table and the Gaussian separability verdicts
"""

import os
import sys

from beamsplitter_entanglement.cli import main as cli_main

STEPS = [
    ("Fock inputs |k, 10-k> over reflectance", ["figure2", "--total", "10", "--steps", "101"], "figure2.csv"),
    ("Squeezed vacua, phi = 0", ["figure3", "--s1", "0.5", "--phi-pi", "0"], "figure3_phi0.csv"),
    ("Squeezed vacua, phi = pi/2", ["figure3", "--s1", "0.5", "--phi-pi", "0.5"], "figure3_phi_half_pi.csv"),
    ("Two squeezed thermal inputs", ["gaussian", "--preset", "sq-thermal-pair", "--nbar", "0", "--s", "0.5"],
     "verdict_sq_thermal_pair.json"),
    ("Squeezed thermal + vacuum", ["gaussian", "--preset", "sq-thermal+vacuum", "--nbar", "0.5", "--s", "0.5"],
     "verdict_sq_thermal_vacuum.json"),
    ("Squeezed vacuum + thermal", ["gaussian", "--preset", "sq-vacuum+thermal", "--nbar", "0.5", "--s", "0.5"],
     "verdict_sq_vacuum_thermal.json"),
]


def run_step(title, argv, output_path):
    """Run one CLI step, writing its table or verdict to output_path"""
    print(f"\n🔍 {title}")
    print("=" * 60)
    code = cli_main(argv + ["--output", output_path])
    if code != 0:
        print(f"❌ Step failed with exit code {code}")
        return False
    print(f"✅ Written: {output_path}")
    return True


def main():
    """Main reproduction launcher"""
    output_dir = sys.argv[1] if len(sys.argv) > 1 else "results"
    os.makedirs(output_dir, exist_ok=True)

    print("🚀 BEAM-SPLITTER ENTANGLEMENT REPRODUCTION")
    print("=" * 80)
    print(f"📁 Output directory: {output_dir}")

    failures = 0
    for title, argv, filename in STEPS:
        if not run_step(title, argv, os.path.join(output_dir, filename)):
            failures += 1

    print("\n" + "=" * 80)
    if failures:
        print(f"❌ {failures} step(s) failed")
        return 1
    print("✅ All tables and verdicts generated")
    return 0


if __name__ == "__main__":
    sys.exit(main())
