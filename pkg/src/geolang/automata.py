"""Nondeterministic acceptors: finite state automata, blind Z^k-counter
automata and pushdown automata.

Edges carry word labels (possibly empty, possibly several letters) so that
machines can be transcribed with labels such as ``tat``.  A counter machine
accepts when it reaches an accept state with every counter at zero; a
pushdown machine accepts when it reaches an accept state with an empty stack.

Searches are over configurations ``(input position, state, store)`` with a
visited set, so epsilon cycles never loop.  The store (counter vector or
stack) is bounded by ``(n + |states| + 1) * max_effect`` where n is the input
length; every machine built in this package needs far less than that.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence


class AlphabetMismatch(ValueError):
    pass


class MachineFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    label: str = ""
    delta: tuple = ()
    op: str = "none"
    sym: Optional[str] = None


@dataclass(frozen=True)
class Automaton:
    states: tuple
    start: str
    accepting: frozenset
    edges: tuple
    alphabet: str
    kind = "abstract"

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "accepting", frozenset(self.accepting))
        object.__setattr__(self, "edges", tuple(self.edges))
        object.__setattr__(self, "alphabet", "".join(sorted(set(self.alphabet))))
        known = set(self.states)
        if self.start not in known:
            raise ValueError(f"start state {self.start!r} is not a state")
        if not self.accepting <= known:
            raise ValueError(f"accept states {sorted(self.accepting - known)} are not states")
        for e in self.edges:
            if e.src not in known or e.dst not in known:
                raise ValueError(f"edge {e} uses an unknown state")
            bad = set(e.label) - set(self.alphabet)
            if bad:
                raise AlphabetMismatch(f"edge label {e.label!r} uses letters {sorted(bad)} outside {self.alphabet!r}")
        self._check_edges()

    def _check_edges(self) -> None:
        pass

    # store semantics, overridden per kind
    def _initial(self):
        return ()

    def _apply(self, store, edge: Edge, bound: int):
        return store

    def _final(self, store) -> bool:
        return True

    def _max_effect(self) -> int:
        return 1

    def _bound(self, n: int) -> int:
        return (n + len(self.states) + 1) * self._max_effect()

    # --- running ----------------------------------------------------------

    def _check_word(self, word: str) -> None:
        bad = set(word) - set(self.alphabet)
        if bad:
            raise AlphabetMismatch(f"letters {sorted(bad)} are not in the alphabet {self.alphabet!r}")

    def accepts(self, word: str) -> bool:
        self._check_word(word)
        n = len(word)
        bound = self._bound(n)
        out: dict[str, list[Edge]] = {}
        for e in self.edges:
            out.setdefault(e.src, []).append(e)
        first = (0, self.start, self._initial())
        seen = {first}
        queue = deque([first])
        while queue:
            pos, q, store = queue.popleft()
            if pos == n and q in self.accepting and self._final(store):
                return True
            for e in out.get(q, ()):
                k = len(e.label)
                if k and word[pos:pos + k] != e.label:
                    continue
                new = self._apply(store, e, bound)
                if new is None:
                    continue
                cfg = (pos + k, e.dst, new)
                if cfg not in seen:
                    seen.add(cfg)
                    queue.append(cfg)
        return False

    def split_labels(self) -> "Automaton":
        """Equivalent machine whose labels have at most one letter.

        The store action of a multi-letter edge happens on its first step.
        """
        states = list(self.states)
        edges = []
        for idx, e in enumerate(self.edges):
            if len(e.label) <= 1:
                edges.append(e)
                continue
            chain = [e.src] + [f"{e.src}~{idx}.{i}" for i in range(1, len(e.label))] + [e.dst]
            states.extend(chain[1:-1])
            for i, ch in enumerate(e.label):
                first = i == 0
                edges.append(replace(
                    e, src=chain[i], dst=chain[i + 1], label=ch,
                    delta=e.delta if first else tuple(0 for _ in e.delta),
                    op=e.op if first else "none", sym=e.sym if first else None,
                ))
        return replace(self, states=tuple(states), edges=tuple(edges))

    def enumerate_language(self, max_len: int) -> list[str]:
        """Accepted words of length <= max_len in shortlex order."""
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        mach = self.split_labels()
        bound = mach._bound(max_len)
        eps: dict[str, list[Edge]] = {}
        by_letter: dict[tuple, list[Edge]] = {}
        for e in mach.edges:
            if e.label:
                by_letter.setdefault((e.src, e.label), []).append(e)
            else:
                eps.setdefault(e.src, []).append(e)

        def closure(configs: Iterable) -> frozenset:
            seen = set(configs)
            stack = list(seen)
            while stack:
                q, store = stack.pop()
                for e in eps.get(q, ()):
                    new = mach._apply(store, e, bound)
                    if new is not None and (e.dst, new) not in seen:
                        seen.add((e.dst, new))
                        stack.append((e.dst, new))
            return frozenset(seen)

        def accepting(configs) -> bool:
            return any(q in mach.accepting and mach._final(s) for q, s in configs)

        letters = sorted(mach.alphabet)
        found = []
        memo: dict[tuple, frozenset] = {}
        frontier = [("", closure([(mach.start, mach._initial())]))]
        if accepting(frontier[0][1]):
            found.append("")
        for _ in range(max_len):
            nxt = []
            for w, configs in frontier:
                for ch in letters:
                    key = (configs, ch)
                    succ = memo.get(key)
                    if succ is None:
                        moved = []
                        for q, store in configs:
                            for e in by_letter.get((q, ch), ()):
                                new = mach._apply(store, e, bound)
                                if new is not None:
                                    moved.append((e.dst, new))
                        succ = closure(moved) if moved else frozenset()
                        if len(memo) < 200_000:
                            memo[key] = succ
                    if succ:
                        nxt.append((w + ch, succ))
                        if accepting(succ):
                            found.append(w + ch)
            frontier = nxt
        return sorted(found, key=lambda w: (len(w), w))

    # --- serialisation ------------------------------------------------------

    def _edge_dict(self, e: Edge) -> dict:
        return {"from": e.src, "to": e.dst, "label": e.label}

    def _extra(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "alphabet": self.alphabet}
        d.update(self._extra())
        d.update({
            "states": list(self.states),
            "start": self.start,
            "accepts": sorted(self.accepting),
            "edges": [self._edge_dict(e) for e in self.edges],
        })
        return d

    def to_json(self, indent: Optional[int] = 1) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def _effect_text(self, e: Edge) -> str:
        return ""

    def to_dot(self, name: str = "M") -> str:
        ids = {q: f"n{i}" for i, q in enumerate(self.states)}
        lines = [f'digraph "{name}" {{', "  rankdir=LR;", '  __start [shape=point, label=""];']
        for q in self.states:
            shape = "doublecircle" if q in self.accepting else "circle"
            lines.append(f'  {ids[q]} [shape={shape}, label="{_esc(q)}"];')
        lines.append(f"  __start -> {ids[self.start]};")
        for e in self.edges:
            text = e.label or "ε"
            eff = self._effect_text(e)
            if eff:
                text = f"({text}, {eff})"
            lines.append(f'  {ids[e.src]} -> {ids[e.dst]} [label="{_esc(text)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __len__(self) -> int:
        return len(self.states)


def _esc(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


@dataclass(frozen=True)
class Fsa(Automaton):
    kind = "fsa"

    def is_deterministic(self) -> bool:
        seen = set()
        for e in self.edges:
            if len(e.label) != 1 or (e.src, e.label) in seen:
                return False
            seen.add((e.src, e.label))
        return True

    def determinize(self) -> "Fsa":
        """Subset construction; the result has only reachable, nonempty subsets."""
        mach = self.split_labels()
        eps: dict[str, list[str]] = {}
        move: dict[tuple, set] = {}
        for e in mach.edges:
            if e.label:
                move.setdefault((e.src, e.label), set()).add(e.dst)
            else:
                eps.setdefault(e.src, []).append(e.dst)

        def close(qs) -> frozenset:
            seen, stack = set(qs), list(qs)
            while stack:
                for r in eps.get(stack.pop(), ()):
                    if r not in seen:
                        seen.add(r)
                        stack.append(r)
            return frozenset(seen)

        def name(s: frozenset) -> str:
            return "{" + ",".join(sorted(s)) + "}"

        start = close([mach.start])
        todo, seen = [start], {start}
        edges = []
        while todo:
            s = todo.pop()
            for ch in mach.alphabet:
                tgt = close({r for q in s for r in move.get((q, ch), ())})
                if not tgt:
                    continue
                edges.append(Edge(name(s), name(tgt), ch))
                if tgt not in seen:
                    seen.add(tgt)
                    todo.append(tgt)
        states = sorted(name(s) for s in seen)
        accepts = [name(s) for s in seen if s & mach.accepting]
        return Fsa(states, name(start), accepts, edges, self.alphabet)


@dataclass(frozen=True)
class CounterMachine(Automaton):
    k: int = 1
    kind = "counter"

    def _check_edges(self) -> None:
        for e in self.edges:
            if len(e.delta) != self.k:
                raise ValueError(f"edge {e} has a delta of length {len(e.delta)}, expected {self.k}")

    def _initial(self):
        return (0,) * self.k

    def _apply(self, store, e: Edge, bound: int):
        if not any(e.delta):
            return store
        new = tuple(a + b for a, b in zip(store, e.delta))
        if any(abs(v) > bound for v in new):
            return None
        return new

    def _final(self, store) -> bool:
        return not any(store)

    def _max_effect(self) -> int:
        return max([1] + [abs(v) for e in self.edges for v in e.delta])

    def _extra(self) -> dict:
        return {"k": self.k}

    def _edge_dict(self, e: Edge) -> dict:
        d = super()._edge_dict(e)
        d["delta"] = list(e.delta)
        return d

    def _effect_text(self, e: Edge) -> str:
        if not any(e.delta):
            return ""
        if self.k == 1:
            v = e.delta[0]
            return "+" * v if v > 0 else "-" * (-v)
        return ",".join(f"{v:+d}" for v in e.delta)


@dataclass(frozen=True)
class PushdownMachine(Automaton):
    stack_alphabet: str = "$"
    kind = "pda"

    def _check_edges(self) -> None:
        for e in self.edges:
            if e.op not in ("none", "push", "pop"):
                raise ValueError(f"unknown stack action {e.op!r}")
            if e.op != "none" and (e.sym is None or e.sym not in self.stack_alphabet):
                raise ValueError(f"stack symbol {e.sym!r} not in {self.stack_alphabet!r}")

    def _apply(self, store, e: Edge, bound: int):
        if e.op == "push":
            if len(store) >= bound:
                return None
            return store + (e.sym,)
        if e.op == "pop":
            if not store or store[-1] != e.sym:
                return None
            return store[:-1]
        return store

    def _final(self, store) -> bool:
        return not store

    def _extra(self) -> dict:
        return {"stack_alphabet": self.stack_alphabet}

    def _edge_dict(self, e: Edge) -> dict:
        d = super()._edge_dict(e)
        d["stack"] = {"op": e.op, "sym": e.sym}
        return d

    def _effect_text(self, e: Edge) -> str:
        return "" if e.op == "none" else f"{e.op} {e.sym}"


KINDS = {"fsa": Fsa, "counter": CounterMachine, "pda": PushdownMachine}


# --- free functions ------------------------------------------------------


def accepts(machine: Automaton, word: str) -> bool:
    return machine.accepts(word)


def enumerate_language(machine: Automaton, max_len: int) -> list[str]:
    return machine.enumerate_language(max_len)


def normalize_unit_moves(c: CounterMachine) -> CounterMachine:
    """Subdivide edges so every label has <= 1 letter and every delta lies in {-1,0,1}^k."""
    states = list(c.states)
    edges = []
    for idx, e in enumerate(c.edges):
        n = max(len(e.label), max((abs(v) for v in e.delta), default=0), 1)
        if n == 1:
            edges.append(e)
            continue
        chain = [e.src] + [f"{e.src}^{idx}.{i}" for i in range(1, n)] + [e.dst]
        states.extend(chain[1:-1])
        for i in range(n):
            delta = tuple((1 if v > 0 else -1) if i < abs(v) else 0 for v in e.delta)
            edges.append(Edge(chain[i], chain[i + 1], e.label[i] if i < len(e.label) else "", delta))
    return CounterMachine(tuple(states), c.start, c.accepting, tuple(edges), c.alphabet, k=c.k)


def intersect_counter_regular(c: CounterMachine, r: Fsa) -> CounterMachine:
    """Product machine accepting L(c) ∩ L(r)."""
    if set(c.alphabet) != set(r.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {c.alphabet!r} vs {r.alphabet!r}")
    if not r.is_deterministic():
        r = r.determinize()
    c1 = c.split_labels()
    delta = {(e.src, e.label): e.dst for e in r.edges}

    def pair(p, q):
        return f"{p}|{q}"

    states = [pair(p, q) for p in c1.states for q in r.states]
    edges = []
    for e in c1.edges:
        for q in r.states:
            if not e.label:
                edges.append(replace(e, src=pair(e.src, q), dst=pair(e.dst, q)))
            elif (q, e.label) in delta:
                edges.append(replace(e, src=pair(e.src, q), dst=pair(e.dst, delta[(q, e.label)])))
    accepts = [pair(p, q) for p in c1.accepting for q in r.accepting]
    return CounterMachine(tuple(states), pair(c1.start, r.start), accepts, tuple(edges), c.alphabet, k=c.k)


def union(machines: Sequence[Automaton], kind: Optional[str] = None) -> Automaton:
    """Disjoint union behind a fresh start state with epsilon edges.

    Counter machines with different k are padded with idle counters.
    """
    machines = list(machines)
    kinds = {m.kind for m in machines}
    if kind is not None:
        kinds.add(kind)
    if len(kinds) > 1:
        raise TypeError(f"cannot take the union of mixed kinds {sorted(kinds)}")
    if not kinds:
        raise TypeError("union of zero machines needs an explicit kind")
    kind = kinds.pop()
    cls = KINDS[kind]
    alphabet = "".join(sorted(set().union(*(m.alphabet for m in machines)))) if machines else ""
    start = "u0"
    states = [start]
    accepts = []
    edges = []
    k = max((m.k for m in machines), default=1) if kind == "counter" else 0
    for i, mach in enumerate(machines):
        pre = f"{i}:"
        states.extend(pre + q for q in mach.states)
        accepts.extend(pre + q for q in mach.accepting)
        for e in mach.edges:
            ne = replace(e, src=pre + e.src, dst=pre + e.dst)
            if kind == "counter":
                ne = replace(ne, delta=tuple(e.delta) + (0,) * (k - len(e.delta)))
            edges.append(ne)
        edges.append(Edge(start, pre + mach.start, "", (0,) * k if kind == "counter" else ()))
    extra = {}
    if kind == "counter":
        extra["k"] = k
    elif kind == "pda":
        extra["stack_alphabet"] = "".join(sorted(set().union(*(m.stack_alphabet for m in machines)) or {"$"}))
    return cls(tuple(states), start, accepts, tuple(edges), alphabet, **extra)


def to_dot(machine: Automaton, name: str = "M") -> str:
    return machine.to_dot(name)


def to_json(machine: Automaton) -> str:
    return machine.to_json()


def from_dict(data: dict) -> Automaton:
    def need(obj, key, where, typ=None):
        if not isinstance(obj, dict) or key not in obj:
            raise MachineFormatError(f"{where}: missing field {key!r}")
        val = obj[key]
        if typ is not None and not isinstance(val, typ):
            raise MachineFormatError(f"{where}.{key}: expected {typ.__name__}, got {type(val).__name__}")
        return val

    kind = need(data, "kind", "$", str)
    if kind not in KINDS:
        raise MachineFormatError(f"$.kind: unknown machine kind {kind!r}")
    states = [str(q) for q in need(data, "states", "$", list)]
    start = str(need(data, "start", "$"))
    accepts = [str(q) for q in need(data, "accepts", "$", list)]
    alphabet = data.get("alphabet")
    raw_edges = need(data, "edges", "$", list)
    edges = []
    for i, ed in enumerate(raw_edges):
        where = f"$.edges[{i}]"
        src, dst = str(need(ed, "from", where)), str(need(ed, "to", where))
        label = need(ed, "label", where, str)
        if kind == "counter":
            delta = need(ed, "delta", where, list)
            if not all(isinstance(v, int) for v in delta):
                raise MachineFormatError(f"{where}.delta: entries must be integers")
            edges.append(Edge(src, dst, label, tuple(delta)))
        elif kind == "pda":
            st = need(ed, "stack", where, dict)
            edges.append(Edge(src, dst, label, (), need(st, "op", where + ".stack", str), st.get("sym")))
        else:
            edges.append(Edge(src, dst, label))
    if alphabet is None:
        alphabet = "".join(sorted({c for e in edges for c in e.label}))
    extra = {}
    if kind == "counter":
        extra["k"] = int(data.get("k", len(edges[0].delta) if edges else 1))
    elif kind == "pda":
        extra["stack_alphabet"] = data.get("stack_alphabet") or "".join(
            sorted({e.sym for e in edges if e.sym}) or "$")
    try:
        return KINDS[kind](tuple(states), start, accepts, tuple(edges), alphabet, **extra)
    except ValueError as exc:
        raise MachineFormatError(f"$: {exc}") from exc


def from_json(text: str) -> Automaton:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MachineFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise MachineFormatError("$: expected a JSON object")
    return from_dict(data)
