#!/usr/bin/env python3
"""Builds a small deterministic git repository for exercising the toolchain.

Layout (~54 Java files):
  alpha/, beta/, delta/, util/  -- ordinary packages with local import chains
  split_x/, split_y/            -- one tightly imported 6-file group split
                                   across two folders (InSep bait)
  gamma/                        -- two unrelated 5-file halves sharing one
                                   folder (InCol bait)

History (~60 commits over ~150 days, 3 authors): the split group always
changes together; gamma halves never change in the same commit.

Usage: make_fixture_repo.py DEST_DIR
"""

import os
import subprocess
import sys

EPOCH_START = 1609459200  # 2021-01-01T00:00:00Z
DAY = 86400

AUTHORS = [
    ("Ada Fixture", "ada@fixture.test"),
    ("Ben Fixture", "ben@fixture.test"),
    ("Cal Fixture", "cal@fixture.test"),
]


def run_git(repo, args, ts, author):
    name, email = author
    env = dict(
        os.environ,
        GIT_AUTHOR_NAME=name,
        GIT_AUTHOR_EMAIL=email,
        GIT_COMMITTER_NAME=name,
        GIT_COMMITTER_EMAIL=email,
        GIT_AUTHOR_DATE=f"{ts} +0000",
        GIT_COMMITTER_DATE=f"{ts} +0000",
    )
    subprocess.run(["git", "-C", repo] + args, check=True, env=env,
                   stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)


def class_name(pkg, i):
    return f"{pkg.capitalize().replace('_', '')}{i}"


def source(pkg, i, imports, revision):
    lines = [f"package {pkg};", ""]
    for imp_pkg, imp_idx in imports:
        lines.append(f"import {imp_pkg}.{class_name(imp_pkg, imp_idx)};")
    lines.append("")
    lines.append(f"public class {class_name(pkg, i)} {{")
    lines.append(f"    static final int REVISION = {revision};")
    for r in range(revision):
        lines.append(f"    int step{r}() {{ return {r}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def file_plan():
    """Returns {relpath: (pkg, idx, imports)} for every fixture file."""
    plan = {}

    def add(pkg, idx, imports):
        plan[f"{pkg}/{class_name(pkg, idx)}.java"] = (pkg, idx, imports)

    for pkg in ("alpha", "beta"):
        for i in range(10):
            imports = [(pkg, (i + 1) % 10), (pkg, (i + 2) % 10)]
            add(pkg, i, imports)
    add("beta", 0, [("beta", 1), ("beta", 2), ("alpha", 0)])  # one cross link

    for i in range(10):
        add("delta", i, [("delta", (i + 1) % 10)])
    for i in range(8):
        add("util", i, [("util", (i + 1) % 8)])

    # Six files importing each other across two folders.
    group = [("split_x", 0), ("split_x", 1), ("split_x", 2),
             ("split_y", 0), ("split_y", 1), ("split_y", 2)]
    for pkg, i in group:
        imports = [(p, j) for (p, j) in group if (p, j) != (pkg, i)]
        add(pkg, i, imports)

    # gamma: two halves with no intra-folder imports.
    for i in range(5):
        add("gamma", i, [("delta", i), ("delta", i + 1)])
    for i in range(5, 10):
        add("gamma", i, [("util", i - 5), ("util", i - 4)])

    return plan


def main():
    if len(sys.argv) != 2:
        print("usage: make_fixture_repo.py DEST_DIR", file=sys.stderr)
        return 2
    repo = sys.argv[1]
    os.makedirs(repo, exist_ok=True)

    plan = file_plan()
    paths = sorted(plan)
    revisions = {p: 1 for p in paths}

    def write(path):
        pkg, idx, imports = plan[path]
        full = os.path.join(repo, path)
        os.makedirs(os.path.dirname(full), exist_ok=True)
        with open(full, "w") as fh:
            fh.write(source(pkg, idx, imports, revisions[path]))

    ts = EPOCH_START
    run_git(repo, ["init", "--quiet", "--initial-branch=main"], ts, AUTHORS[0])

    # Seed: the first 30 files (sorted order keeps this deterministic).
    seed = paths[:30]
    for p in seed:
        write(p)
    run_git(repo, ["add", "-A"], ts, AUTHORS[0])
    run_git(repo, ["commit", "--quiet", "-m", "seed fixture sources"], ts, AUTHORS[0])

    remaining = [p for p in paths if p not in seed]
    split_group = [p for p in paths if p.startswith(("split_x/", "split_y/"))]
    gamma_low = [p for p in paths if p.startswith("gamma/") and p < "gamma/Gamma5"]
    gamma_high = [p for p in paths if p.startswith("gamma/") and p >= "gamma/Gamma5"]
    alpha = [p for p in paths if p.startswith("alpha/")]
    beta = [p for p in paths if p.startswith("beta/")]

    present = set(seed)
    for c in range(1, 60):
        ts = EPOCH_START + int(c * 2.5 * DAY)
        author = AUTHORS[c % 3]
        touched = []

        if remaining and c % 2 == 0:
            newcomer = remaining.pop(0)
            present.add(newcomer)
            touched.append(newcomer)

        kind = c % 5
        if kind == 0:
            touched += [p for p in split_group if p in present]
        elif kind == 1:
            touched += [p for p in gamma_low if p in present][:2]
        elif kind == 2:
            touched += [p for p in gamma_high if p in present][:2]
        elif kind == 3:
            touched += [p for p in alpha if p in present][c % 4:c % 4 + 3]
        else:
            touched += [p for p in beta if p in present][c % 4:c % 4 + 2]

        if not touched:
            touched = [seed[c % len(seed)]]
        for p in dict.fromkeys(touched):
            revisions[p] += 1
            write(p)
        run_git(repo, ["add", "-A"], ts, author)
        run_git(repo, ["commit", "--quiet", "-m", f"fixture change {c}"], ts, author)

    return 0


if __name__ == "__main__":
    sys.exit(main())
