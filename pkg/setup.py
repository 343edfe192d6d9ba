"""
Setup script for the regular Turán toolkit
"""

import os
import subprocess
import sys


def install_requirements():
    """Install required packages"""
    print("Installing requirements...")
    try:
        subprocess.check_call([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"])
        print("Requirements installed successfully!")
        return True
    except subprocess.CalledProcessError as e:
        print(f"Error installing requirements: {e}")
        return False


def create_env_file():
    """Create .env file template"""
    env_content = """# Regular Turán toolkit environment variables

# Smallest n at which "sufficiently large n" branches report Exact
REX_K4E_THRESHOLD=25
REX_C5_THRESHOLD=21
REX_UNICYCLIC_THRESHOLD=25

# Exhaustive search budget
REX_BUDGET_NODES=2000000
REX_BUDGET_SECONDS=300
REX_ODD_CYCLE_CAP=true
REX_WORKERS=1

# Output
REX_DEFAULT_FORMAT=csv
REX_LOG_LEVEL=WARNING
# REX_LOG_FILE=rex.log
"""

    with open(".env", "w") as f:
        f.write(env_content)

    print("Created .env file template")


def check_config():
    """Report REX_* settings that are out of range"""
    from utils.config import Config

    issues = Config().problems()
    for issue in issues:
        print(f"Config problem: {issue}")
    if not issues:
        print("Configuration looks good!")
    return not issues


def run_test():
    """Build one small witness to verify installation"""
    print("Running basic test...")
    try:
        from constructions import k4_extremal
        from oracle import verify_claim
        from patterns import parse_pattern
    except ImportError as e:
        print(f"Import failed: {e}")
        return False

    result = k4_extremal(7)
    report = verify_claim(result.graph, parse_pattern("K4"), result.claimed_degree)
    print(f"K4-free 4-regular witness on 7 vertices: {'ok' if report.passed else 'FAILED'}")
    return report.passed


def main():
    """Main setup function"""
    print("Regular Turán Toolkit Setup")
    print("=" * 50)

    if not install_requirements():
        print("Setup failed at requirements installation")
        return

    if not os.path.exists(".env"):
        create_env_file()

    if not check_config():
        print("\nFix the values in .env and run setup again")
        return

    if not run_test():
        print("Setup failed at witness test")
        return

    print("\nSetup completed successfully!")
    print("\nNext steps:")
    print("1. Run: python main.py selftest")
    print("2. Run: python main.py table --forbid K3 --n 4..16")
    print("3. Run: pytest")


if __name__ == "__main__":
    main()
