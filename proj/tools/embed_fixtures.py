#!/usr/bin/env python3
"""Regenerate include/homfly/fixtures_data.hpp from data/fixtures/*.txt."""

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data" / "fixtures"
OUT = ROOT / "include" / "homfly" / "fixtures_data.hpp"

NAMES = [
    "z0_total",
    "z0_cancelled",
    "z1_total",
    "z1_cancelled",
    "z2_total",
    "z2_cancelled",
    "z3",
    "z4",
    "z5",
]


def main() -> None:
    parts = [
        "#pragma once\n"
        "/**\n"
        " * Embedded copies of the bundled chain-complex fixtures found\n"
        " * under data/fixtures.  Regenerate with tools/embed_fixtures.py\n"
        " * after editing the data files; a test asserts byte equality.\n"
        " */\n"
        "\n"
        "#include <array>\n"
        "#include <string_view>\n"
        "#include <utility>\n"
        "\n"
        "namespace homfly::fixtures_data {\n"
    ]
    for name in NAMES:
        text = (DATA / f"{name}.txt").read_text()
        parts.append(
            f"\ninline constexpr std::string_view {name} = R\"FIX({text})FIX\";\n"
        )
    parts.append(
        "\ninline constexpr std::array<std::pair<std::string_view, "
        "std::string_view>,\n                            "
        f"{len(NAMES)}>\n    kAll{{{{\n"
    )
    for name in NAMES:
        parts.append(f'        {{"{name}", {name}}},\n')
    parts.append("    }};\n\n}  // namespace homfly::fixtures_data\n")
    OUT.write_text("".join(parts))
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
