"""Build-artifact generation from a total configuration.

config.h defines one `CONFIG_<ID>` macro per true option, in declaration
order, inside include guards. Options spelled `foo?` are the yes/no
sugar: the `foo?` id itself emits nothing, `foo_yes` true emits
`#define CONFIG_FOO`, and `foo_no` never emits anything, so C code can
test the single macro.

config.mk emits one `all_<key> = ...` line per property key (keys sorted
alphabetically), joining the values of every true owner in declaration
order of the property statements.
"""

from __future__ import annotations

from typing import Mapping

from .errors import IncompleteValuationError
from .parser import DepsModel, sanitized_name


def macro_name(option: str) -> str:
    return "CONFIG_" + sanitized_name(option).upper()


def _require_total(model: DepsModel, valuation: Mapping[str, bool]) -> None:
    missing = [opt for opt in model.options if opt not in valuation]
    if missing:
        raise IncompleteValuationError(missing)


def generate_config_h(model: DepsModel, valuation: Mapping[str, bool]) -> str:
    _require_total(model, valuation)
    lines = ["#ifndef CONFIG_H", "#define CONFIG_H"]
    for opt in model.options:
        if opt.endswith("?"):
            continue
        iface = model.interface_of.get(opt)
        if iface is not None and iface.endswith("?"):
            base = iface[:-1]
            if opt == base + "_no":
                continue
            if opt == base + "_yes":
                if valuation[opt]:
                    lines.append("#define " + macro_name(iface))
                continue
        if valuation[opt]:
            lines.append("#define " + macro_name(opt))
    lines.append("#endif")
    return "".join(line + "\n" for line in lines)


def generate_config_mk(model: DepsModel, valuation: Mapping[str, bool]) -> str:
    _require_total(model, valuation)
    lines = []
    for key in model.property_keys():
        values: list[str] = []
        for prop in model.props():
            if prop.key == key and valuation[prop.owner]:
                values.extend(prop.values)
        if values:
            lines.append(f"all_{key} = " + " ".join(values))
        else:
            lines.append(f"all_{key} =")
    return "".join(line + "\n" for line in lines)
