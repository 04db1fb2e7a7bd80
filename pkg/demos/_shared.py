from importlib import resources
from pathlib import Path

FIXTURES = Path(str(resources.files("contentzone") / "data" / "fixtures"))


def banner(title: str) -> None:
    print()
    print(title)
    print("-" * len(title))
