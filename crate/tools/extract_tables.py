#!/usr/bin/env python3
"""Parse the LaTeX tables/figures of paper.md into JSON datasets.

Outputs one JSON file per group section under crates/core/data/.
Each output is reviewed by hand against the source before being frozen;
every parsed row keeps its raw LaTeX as the anchor string.
"""
import json
import re
import sys
from pathlib import Path

PAPER = Path(__file__).resolve().parent.parent / "paper.md"
OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data"

text = PAPER.read_text()
lines = text.splitlines()


def subscripted(tok):
    """s_{1}s_{2}... -> '12...'; returns None if not a pure s-word."""
    parts = re.findall(r"s_\{?([123])\}?", tok)
    rebuilt = "".join(f"s_{{{p}}}" for p in parts)
    stripped = tok.replace(" ", "").replace("\\hspace{2pt}", "")
    if re.fullmatch(r"(s_\{?[123]\}?)+", stripped):
        return "".join(parts)
    return None


def norm_sym(tok):
    """u_{0}^{6} or u^{6}_{0} -> 'u_0^6'; v_{3} -> 'v_3'; w_{1,2} -> 'w_12'."""
    tok = tok.replace(" ", "")
    m = re.fullmatch(r"([uv]'?)_\{(\d+)\}\^\{(\d+)\}", tok)
    if m:
        return f"{m.group(1)}_{m.group(2)}^{m.group(3)}"
    m = re.fullmatch(r"([uv]'?)\^\{(\d+)\}_\{(\d+)\}", tok)
    if m:
        return f"{m.group(1)}_{m.group(3)}^{m.group(2)}"
    m = re.fullmatch(r"([uv]'?)_\{(\d+)\}", tok)
    if m:
        return f"{m.group(1)}_{m.group(2)}"
    m = re.fullmatch(r"w_\{(\d),(\d)\}", tok)
    if m:
        return f"w_{m.group(1)}{m.group(2)}"
    if tok == "e":
        return "e"
    return None


def parse_tokens(body):
    """Subscript body -> list of tokens: digits words, $vars, symbol names."""
    body = body.replace("\\hspace{2pt}", "").replace(" ", "")
    toks = []
    i = 0
    while i < len(body):
        m = re.match(r"(s_\{?[123]\}?)+", body[i:])
        if m:
            toks.append("".join(re.findall(r"s_\{?([123])\}?", m.group(0))))
            i += len(m.group(0))
            continue
        m = re.match(r"y_\{1\}|y_\{2\}|y_1|y_2|y", body[i:])
        if m:
            v = m.group(0).replace("_{", "").replace("}", "").replace("_", "")
            toks.append("$" + ("y" if v == "y" else v))
            i += len(m.group(0))
            continue
        m = re.match(r"w_\{1,2\}|w_\{2,3\}|w_\{1\}|w_\{2\}|w", body[i:])
        if m:
            raw = m.group(0)
            if raw in ("w_{1,2}", "w_{2,3}"):
                toks.append("w_" + raw[3] + raw[5])
            elif raw == "w":
                toks.append("$w")
            else:
                toks.append("$w" + raw[3])
            i += len(raw)
            continue
        m = re.match(r"[uv]'?_\{\d+\}(\^\{\d+\})?|[uv]'?\^\{\d+\}_\{\d+\}", body[i:])
        if m:
            toks.append(norm_sym(m.group(0)))
            i += len(m.group(0))
            continue
        if body[i] == "x":
            toks.append("$x")
            i += 1
            continue
        if body[i] == "u" or body[i] == "v":
            toks.append("$u")
            i += 1
            continue
        raise ValueError(f"unparsed subscript at {body[i:]!r} in {body!r}")
    return toks


def parse_coeff(c):
    """LaTeX coefficient -> template string like 'v^(-a+3b)', '1', '-1',
    '(v^(2a)-v^(2a-2b))'."""
    c = c.replace(" ", "").replace("\\hspace{2pt}", "")
    sign = ""
    if c.startswith("+"):
        c = c[1:]
    elif c.startswith("-"):
        sign = "-"
        c = c[1:]
    if c == "":
        return sign + "1"

    def one_v(vexpr):
        m = re.fullmatch(r"v(\^\{([^{}]*)\})?", vexpr)
        if m is None:
            raise ValueError(f"bad coeff piece {vexpr!r}")
        e = m.group(2)
        if e is None or e == "":
            e = "1"
        return f"v^({e})"

    if c.startswith("("):
        inner = c[1:-1]
        parts = re.split(r"(?<=[}v])-(?=v)", inner)
        if len(parts) == 2:
            return f"{sign}({one_v(parts[0])}-{one_v(parts[1])})"
        raise ValueError(f"bad parenthesised coeff {c!r}")
    return sign + one_v(c)


def parse_rhs(rhs, anchor):
    """'T_{xu} + v^{-a+3b}T_{s_3}C_{u_0^6} - ...' -> term list."""
    rhs = rhs.strip().rstrip("\\").strip()
    # one row of the square-lattice tables carries a literal "-+" in the
    # source; every sibling regime prints "+" there
    rhs = rhs.replace("-+", "+")
    # tokenize into signed terms: split at top-level +/- that precede T, C or v
    terms = []
    # normalise
    s = rhs.replace("\\hspace{2pt}", " ")
    # regex for one term: optional coeff, then optional T_{...}, optional C_{...}
    pat = re.compile(
        r"(?P<sign>[+-]?)\s*(?P<coeff>\(v[^()]*\)|v(\^\{[^{}]*\})?)?\s*"
        r"(?P<t>T_\{(?:[^{}]|\{[^{}]*\})*\})?\s*"
        r"(?P<c>C_\{(?:[^{}]|\{[^{}]*\})*\})?"
    )
    pos = 0
    out = []
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = pat.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse rhs at {s[pos:]!r} (anchor {anchor!r})")
        sign = m.group("sign") or "+"
        coeff = m.group("coeff") or ""
        t = m.group("t")
        c = m.group("c")
        if not (coeff or t or c):
            raise ValueError(f"empty term in {s!r} at {pos}")
        coeff_t = parse_coeff(sign + coeff)
        term = {"coeff": coeff_t}
        if t:
            term["t"] = parse_tokens(t[3:-1])
        if c:
            term["c"] = parse_tokens(c[3:-1])
        out.append(term)
        pos = m.end()
    return out


def parse_x_cell(cell):
    """x column -> {'lit': '12123'} or {'var': 'y1', 'w': bool, 'tail': '321'}."""
    cell = cell.replace(" ", "").replace("\\hspace{2pt}", "")
    toks = parse_tokens(cell)
    if len(toks) == 1 and re.fullmatch(r"[123]*", toks[0]):
        return {"lit": toks[0]}
    # variable rows
    var = None
    has_w = False
    tail = ""
    for t in toks:
        if t in ("$y", "$y1", "$y2"):
            var = t[1:]
        elif t in ("$w", "$w1", "$w2"):
            has_w = True
        elif re.fullmatch(r"[123]*", t):
            tail += t
        else:
            raise ValueError(f"unexpected token {t} in x cell {cell!r}")
    return {"var": var, "w": has_w, "tail": tail}


def grab_i5_table(start, end):
    """Parse one Condition I5 array between given line indices."""
    block = "\n".join(lines[start:end])
    m = re.search(r"u\\in U & x\\in X_\{u\} & T_\{x\}C_\{u\} \\mod \\mathcal\{H\}_\{<0\}\\\\ \\hline(.*?)\\end\{array\}", block, re.S)
    if not m:
        raise ValueError(f"no I5 array between {start} and {end}")
    body = m.group(1)
    rows = [r.strip() for r in re.split(r"\\\\\s*\\hline", body)]
    out = []
    for row in rows:
        row = row.strip()
        if not row:
            continue
        cells = [c.strip() for c in row.split("&")]
        if len(cells) != 3:
            raise ValueError(f"bad I5 row {row!r}")
        u = norm_sym(cells[0]) or parse_tokens(cells[0])[0]
        x = parse_x_cell(cells[1])
        rhs = parse_rhs(cells[2], row)
        # first term must be T_{xu}
        first = rhs[0]
        if first.get("t") != ["$x", "$u"] or first["coeff"] != "1":
            raise ValueError(f"rhs does not start with T_xu: {row!r}")
        out.append({
            "u": u,
            "x": x,
            "rhs": rhs[1:],
            "anchor": re.sub(r"\s+", " ", row)[:200],
        })
    return out


def grab_labels(start, end, flip=False):
    """Cell labels \\rput(x,y){\\tilde{c}_{i}^{j}} within a line range."""
    labels = []
    pat = re.compile(
        r"\\rput\((-?[\d.]+),(-?[\d.]+)\)\{.*?\\tilde\{c\}(?:\^\{?(\d+)\}?_\{?(\d+)\}?|_\{?(\d+)\}?\^\{?(\d+)\}?)"
    )
    for ln in lines[start:end]:
        m = pat.search(ln)
        if m:
            x, y = float(m.group(1)), float(m.group(2))
            if m.group(3) is not None:
                j, i = m.group(3), m.group(4)
            else:
                i, j = m.group(5), m.group(6)
            labels.append({"name": f"u_{i}^{j}", "point": [x, y]})
    return labels


def grab_translations(start, end):
    """'Let $w=s_{1}...$, ...' lines -> dict of translation words."""
    block = "\n".join(lines[start:end])
    out = {}
    for name, body in re.findall(r"(w(?:_\{[12]\})?)\s*=\s*((?:s_\{[123]\})+)", block):
        key = name.replace("_{", "").replace("}", "")
        out[key] = "".join(re.findall(r"s_\{([123])\}", body))
    return out


# ---------------------------------------------------------------- G2 section 2
G2_CASES = [
    ("r_gt_2", 618, 1197),
    ("r_eq_2", 1197, 1789),
    ("r_32_2", 1789, 2490),
    ("r_eq_32", 2490, 3079),
    ("r_1_32", 3079, 3674),
    ("r_eq_1", 3674, 4281),
    ("r_lt_1", 4281, 4897),
]

g2_i5 = {}
for case, a, b in G2_CASES:
    i5 = grab_i5_table(a, b)
    labels = grab_labels(a, b)
    trans = grab_translations(a, b)
    g2_i5[case] = {"labels": labels, "translations": trans, "rows": i5}

# ---------------------------------------------------------------- B2 section 4
# case item line numbers (1-based from grep), converted to 0-based ranges
B2_ITEMS = [
    ("c3", 26961),
    ("d2_hi", 27419),
    ("c2", 27870),
    ("d1_hi", 28359),
    ("c1", 28808),
    ("r1_eq_r2_gt_1", 29280),
    ("r1_gt_3_r2_eq_1", 29717),
    ("r1_eq_3_r2_eq_1", 30162),
    ("r1_2_3_r2_eq_1", 30597),
    ("r1_eq_2_r2_eq_1", 31052),
    ("r1_1_2_r2_eq_1", 31490),
    ("a1", 31924),
    ("d2_lo", 32366),
    ("a2", 32798),
    ("s2_hi", 33283),
    ("a3", 33740),
    ("d1_lo", 34242),
    ("a4", 34730),
    ("s2_lo", 35226),
    ("a5", 35664),
    ("d1_mid", 36111),
    ("p32_12", 36553),
    ("r1_eq_1_r2_lt_1", 36966),
    ("b1", 37463),
    ("s1_line", 37968),
    ("b2", 38447),
    ("eq_12_1", 38933),
    ("eq_half", 39390),
    ("eq_lt_half", 39792),
    ("r1_eq_r2_eq_1", 40194),
]

b2_i5 = {}
for idx, (case, ln) in enumerate(B2_ITEMS):
    start = ln - 1
    end = (B2_ITEMS[idx + 1][1] - 1) if idx + 1 < len(B2_ITEMS) else len(lines)
    labels = grab_labels(start, end)
    trans = grab_translations(start, end)
    try:
        rows = grab_i5_table(start, end)
    except ValueError as exc:
        if "no I5 array" not in str(exc):
            raise
        rows = []
    b2_i5[case] = {"labels": labels, "translations": trans, "rows": rows}

# ---------------------------------------------------------------- B2 section 3
def parse_value(expr):
    expr = expr.strip().replace("\\\\", "").strip()
    return expr


def grab_partition_table(start, end):
    block = "\n".join(lines[start:end])
    m = re.search(
        r"\\caption\{Partition \$\\mathcal\{P\}_\{LR,?\\mathfrak\{C\}\}\$ and values.*?\\begin\{array\}\{\|l\|c\|\} \\hline(.*?)\\end\{array\}",
        block,
        re.S,
    )
    if not m:
        raise ValueError(f"no partition table in {start}..{end}")
    rows = []
    for row in m.group(1).split("\\\\"):
        row = row.strip().replace("\\hline", "").strip()
        if not row:
            continue
        lhs, val = row.split("&")
        name_m = re.match(r"\s*b_\{(\d+)\}\s*=\s*(.*)", lhs)
        name = f"b_{name_m.group(1)}"
        setexpr = name_m.group(2).strip()
        words = []
        special = None
        if setexpr.startswith("\\{"):
            inner = setexpr[2:-2] if setexpr.endswith("\\}") else setexpr[2:]
            # split on commas outside braces (w_{1,2} stays whole)
            pieces, depth, cur = [], 0, ""
            for ch in inner:
                if ch == "{":
                    depth += 1
                elif ch == "}":
                    depth -= 1
                if ch == "," and depth == 0:
                    pieces.append(cur)
                    cur = ""
                else:
                    cur += ch
            pieces.append(cur)
            for piece in pieces:
                piece = piece.strip()
                if piece == "e":
                    words.append("e")
                else:
                    w = subscripted(piece) or norm_sym(piece)
                    if w is None:
                        raise ValueError(f"bad set element {piece!r}")
                    words.append(w)
        else:
            special = setexpr
        rows.append({
            "name": name,
            "words": words,
            "special": special,
            "value": parse_value(val),
            "anchor": re.sub(r"\s+", " ", row)[:160],
        })
    return rows


B2_SEC3 = [
    ("eq_gt1", 4995, 5602),
    ("open_hi", 5602, 8434),
    ("r2_eq_1", 8434, 11309),
    ("r1_hi_r2_lo", 11309, 17233),
    ("r1_eq_1", 17233, 17834),
    ("both_lo", 17834, 19580),
    ("eq_lo", 19580, 21327),
    ("eq_one", 21327, 21947),
]

b2_partitions = {}
for case, a, b in B2_SEC3:
    b2_partitions[case] = {"blocks": grab_partition_table(a - 1, b - 1)}

OUT.mkdir(parents=True, exist_ok=True)
(Path("/tmp/g2_i5_raw.json")).write_text(json.dumps(g2_i5, indent=1))
(Path("/tmp/b2_i5_raw.json")).write_text(json.dumps(b2_i5, indent=1))
(Path("/tmp/b2_part_raw.json")).write_text(json.dumps(b2_partitions, indent=1))
print("g2 cases:", {k: len(v["rows"]) for k, v in g2_i5.items()})
print("b2 cases with tables:", {k: len(v["rows"]) for k, v in b2_i5.items() if v["rows"]})
print("b2 partition blocks:", {k: len(v["blocks"]) for k, v in b2_partitions.items()})
print("b2 label counts:", {k: len(v["labels"]) for k, v in b2_i5.items()})

# ---------------------------------------------------------------- P_C tables
def grab_pc_table(start, end):
    block = "\n".join(lines[start:end])
    m = re.search(
        r"\\caption\{Partition \$\\mathcal\{P\}_\{\\mathfrak\{C\}\}\$\}.*?\\begin\{array\}\{[^}]*\} \\hline(.*?)\\end\{array\}",
        block,
        re.S,
    )
    if not m:
        raise ValueError(f"no P_C table in {start}..{end}")
    out = []
    for row in m.group(1).split("\\hline"):
        row = row.strip().rstrip("\\").strip()
        if not row:
            continue
        cells = row.split("&")
        label = cells[0].strip()
        groups = []
        for cell in cells[1:]:
            cell = cell.strip()
            if not cell:
                continue
            # strip multicolumn wrapper
            mm = re.match(r"\\multicolumn\{\d\}\{[^}]*\}\{(.*)\}$", cell)
            if mm:
                cell = mm.group(1).strip()
            # split on \leftrightarrow (possibly decorated with \overset)
            sides = re.split(r"(?:\\overset\{[^{}]*\}\{)?\\leftrightarrow\}?", cell)
            for side in sides:
                names = re.findall(r"b_\{(\d+)\}", side)
                if names:
                    groups.append([f"b_{n}" for n in names])
        out.append({"label": re.sub(r"\s+", " ", label), "groups": groups,
                    "anchor": re.sub(r"\s+", " ", row)[:200]})
    return out

b2_pc = {}
for case, a, b in B2_SEC3:
    b2_pc[case] = grab_pc_table(a - 1, b - 1)
Path("/tmp/b2_pc_raw.json").write_text(json.dumps(b2_pc, indent=1))
print("pc rows:", {k: len(v) for k, v in b2_pc.items()})
for k, v in b2_pc.items():
    for row in v:
        print(" ", k, "|", row["label"], "->", row["groups"])
