"""Text documents for presentations, morphisms, parameter sets and bundles.

The native format is line oriented, one ``key: value`` pair per line:

    kind: presentation
    characteristic: 2
    generator: x 1
    relation: x^2

Lists are repeated keys.  The same tree can be stored as JSON (files ending
in ``.json``); both go through one JSON schema before anything is built.
Other documents are referenced by path (relative to the referring file) or
by ``fixtures:NAME`` for the embedded corpus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import DocumentError, SchemaError

FIXTURE_PREFIX = "fixtures:"

_NAME = {"type": "string", "pattern": "^[A-Za-z][A-Za-z0-9_]*$"}
_EXPR = {"type": "string", "minLength": 1}
_REF = {"type": "string", "minLength": 1}
_LABELLED = {
    "type": "object",
    "required": ["label", "expr"],
    "properties": {"label": _NAME, "expr": _EXPR},
    "additionalProperties": False,
}

SCHEMAS = {
    "presentation": {
        "type": "object",
        "required": ["kind", "characteristic", "generators", "relations"],
        "properties": {
            "kind": {"const": "presentation"},
            "name": _NAME,
            "characteristic": {"type": "integer", "minimum": 2},
            "generators": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "degree"],
                    "properties": {"name": _NAME, "degree": {"type": "integer", "minimum": 1}},
                    "additionalProperties": False,
                },
            },
            "relations": {"type": "array", "items": _EXPR},
            "depth": {"type": "integer", "minimum": 0},
            "series": _REF,
        },
        "additionalProperties": False,
    },
    "morphism": {
        "type": "object",
        "required": ["kind", "source", "target", "images"],
        "properties": {
            "kind": {"const": "morphism"},
            "name": _NAME,
            "source": _REF,
            "target": _REF,
            "images": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["generator", "expr"],
                    "properties": {"generator": _NAME, "expr": _EXPR},
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "parameters": {
        "type": "object",
        "required": ["kind", "ring", "params"],
        "properties": {
            "kind": {"const": "parameters"},
            "name": _NAME,
            "ring": _REF,
            "params": {"type": "array", "items": _LABELLED},
        },
        "additionalProperties": False,
    },
    "series": {
        "type": "object",
        "required": ["kind", "numerator", "denominator"],
        "properties": {
            "kind": {"const": "series"},
            "name": _NAME,
            "ring": _REF,
            "numerator": _EXPR,
            "denominator": _EXPR,
            "cleared": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["degrees", "polynomial"],
                    "properties": {
                        "degrees": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                        "polynomial": _EXPR,
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
    "bundle": {
        "type": "object",
        "required": ["kind", "ring"],
        "properties": {
            "kind": {"const": "bundle"},
            "name": _NAME,
            "ring": _REF,
            "morphism": _REF,
            "depth": {"type": "integer", "minimum": 0},
            "n_max": {"type": "integer", "minimum": 0},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["criterion", "label", "params"],
                    "properties": {
                        "criterion": {"enum": ["benson", "symonds", "king-rel"]},
                        "label": _NAME,
                        "params": _REF,
                        "degree": {"type": "integer", "minimum": 1},
                    },
                    "additionalProperties": False,
                },
            },
        },
        "additionalProperties": False,
    },
}

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": sorted(SCHEMAS)}},
}


# line format ----------------------------------------------------------------


def _split_pair(text, lineno, what):
    parts = text.split()
    if len(parts) != 2:
        raise SchemaError(f"expected '{what}'", f"line {lineno}")
    return parts


def _split_eq(text, lineno, what):
    left, sep, right = text.partition("=")
    if not sep or not left.strip() or not right.strip():
        raise SchemaError(f"expected '{what}'", f"line {lineno}")
    return left.strip(), right.strip()


def _int(text, lineno):
    try:
        return int(text)
    except ValueError:
        raise SchemaError(f"expected an integer, got {text!r}", f"line {lineno}") from None


def parse_lines(text: str) -> tuple:
    """Line format to a JSON-style tree plus a map from tree path to line number."""
    tree = {}
    where = {}
    lists = {
        "generator": "generators",
        "relation": "relations",
        "image": "images",
        "param": "params",
        "cleared": "cleared",
        "row": "rows",
    }
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if not sep or not key:
            raise SchemaError("expected 'key: value'", f"line {lineno}")
        if key in lists:
            bucket = tree.setdefault(lists[key], [])
            where[(lists[key], len(bucket))] = lineno
            bucket.append(_list_item(key, value, lineno))
            continue
        if key in tree:
            raise SchemaError(f"duplicate key {key!r}", f"line {lineno}")
        where[(key,)] = lineno
        if key in ("characteristic", "depth", "n_max"):
            tree[key] = _int(value, lineno)
        else:
            tree[key] = value
    kind = tree.get("kind")
    if kind == "presentation":
        tree.setdefault("relations", [])
        tree.setdefault("generators", [])
    elif kind == "morphism":
        tree.setdefault("images", [])
    elif kind == "parameters":
        tree.setdefault("params", [])
    return tree, where


def _list_item(key, value, lineno):
    if key == "generator":
        name, deg = _split_pair(value, lineno, "generator: NAME DEGREE")
        return {"name": name, "degree": _int(deg, lineno)}
    if key == "relation":
        return value
    if key == "image":
        name, expr = _split_eq(value, lineno, "image: GENERATOR = EXPR")
        return {"generator": name, "expr": expr}
    if key == "param":
        label, expr = _split_eq(value, lineno, "param: LABEL = EXPR")
        return {"label": label, "expr": expr}
    if key == "cleared":
        degs, poly = _split_eq(value, lineno, "cleared: D1,D2,... = POLYNOMIAL")
        return {"degrees": [_int(d, lineno) for d in degs.split(",")], "polynomial": poly}
    # row: CRITERION LABEL = REF [@ DEGREE]
    head, ref = _split_eq(value, lineno, "row: CRITERION LABEL = REF [@ DEGREE]")
    criterion, label = _split_pair(head, lineno, "row: CRITERION LABEL = REF [@ DEGREE]")
    item = {"criterion": criterion, "label": label}
    ref, at, degree = ref.partition("@")
    item["params"] = ref.strip()
    if at:
        item["degree"] = _int(degree.strip(), lineno)
    return item


def format_lines(tree: dict) -> str:
    out = []
    for key, value in tree.items():
        if key == "generators":
            out += [f"generator: {g['name']} {g['degree']}" for g in value]
        elif key == "relations":
            out += [f"relation: {r}" for r in value]
        elif key == "images":
            out += [f"image: {i['generator']} = {i['expr']}" for i in value]
        elif key == "params":
            out += [f"param: {p['label']} = {p['expr']}" for p in value]
        elif key == "cleared":
            out += [f"cleared: {','.join(map(str, c['degrees']))} = {c['polynomial']}" for c in value]
        elif key == "rows":
            for r in value:
                tail = f" @ {r['degree']}" if "degree" in r else ""
                out.append(f"row: {r['criterion']} {r['label']} = {r['params']}{tail}")
        else:
            out.append(f"{key}: {value}")
    return "\n".join(out) + "\n"


def validate_tree(tree: dict, where: dict | None = None) -> None:
    where = where or {}
    try:
        jsonschema.validate(tree, DOCUMENT_SCHEMA)
        jsonschema.validate(tree, SCHEMAS[tree["kind"]])
    except jsonschema.ValidationError as exc:
        path = tuple(exc.absolute_path)
        location = "/".join(map(str, path)) or "document"
        for k in range(len(path), 0, -1):
            if path[:k] in where:
                location = f"line {where[path[:k]]} ({location})"
                break
        raise SchemaError(exc.message, location) from None


# documents ------------------------------------------------------------------


@dataclass
class Document:
    tree: dict
    origin: str | None = None
    _built: object = field(default=None, repr=False, compare=False)

    @property
    def kind(self) -> str:
        return self.tree["kind"]

    @property
    def name(self):
        return self.tree.get("name")

    def resolve(self, ref: str) -> Document:
        return load_document(ref, base=self.origin)

    def build(self):
        """The mathematical object the document describes (cached)."""
        if self._built is None:
            self._built = _BUILDERS[self.kind](self)
        return self._built


class PresentationDocument(Document):
    @property
    def generators(self):
        return [(g["name"], g["degree"]) for g in self.tree["generators"]]

    @property
    def relations(self):
        return list(self.tree["relations"])

    @property
    def depth(self):
        return self.tree.get("depth")


class MorphismDocument(Document):
    pass


class ParameterDocument(Document):
    @property
    def labels(self):
        return [p["label"] for p in self.tree["params"]]


class SeriesDocument(Document):
    pass


class BundleDocument(Document):
    pass


_CLASSES = {
    "presentation": PresentationDocument,
    "morphism": MorphismDocument,
    "parameters": ParameterDocument,
    "series": SeriesDocument,
    "bundle": BundleDocument,
}


def _build_presentation(doc):
    from .algebra import make_presentation

    return make_presentation(doc.tree["characteristic"], doc.generators, doc.relations)


def _build_morphism(doc):
    from .morphism import make_morphism

    source = doc.resolve(doc.tree["source"]).build()
    target = doc.resolve(doc.tree["target"]).build()
    images = {}
    for item in doc.tree["images"]:
        if item["generator"] in images:
            raise SchemaError(f"two images for {item['generator']}", doc.origin)
        images[item["generator"]] = item["expr"]
    unknown = [n for n in images if n not in source.names]
    if unknown:
        raise SchemaError(f"{', '.join(unknown)} is not a source generator", doc.origin)
    return make_morphism(source, target, images)


def _build_parameters(doc):
    from .parameters import ParameterSet

    ring = doc.resolve(doc.tree["ring"]).build()
    return ParameterSet(ring, tuple(p["expr"] for p in doc.tree["params"]))


def _build_series(doc):
    from .hilbert import HilbertSeries, IntegerPolynomial

    num = IntegerPolynomial.parse(doc.tree["numerator"])
    den = IntegerPolynomial.parse(doc.tree["denominator"])
    return num, den, [(tuple(c["degrees"]), IntegerPolynomial.parse(c["polynomial"])) for c in doc.tree.get("cleared", [])]


def _build_bundle(doc):
    from .criteria import Bundle

    ring = doc.resolve(doc.tree["ring"]).build()
    morphism = doc.resolve(doc.tree["morphism"]).build() if "morphism" in doc.tree else None
    bundle = Bundle(ring, morphism, doc.tree.get("depth", 0), n_max=doc.tree.get("n_max", 100))
    for row in doc.tree.get("rows", []):
        params = doc.resolve(row["params"]).build()
        if params.ring.signature != ring.signature:
            raise SchemaError(f"parameters of row {row['label']} live on another ring", doc.origin)
        params = params if params.ring is ring else type(params)(ring, params.elements)
        if row["criterion"] == "benson":
            bundle.benson[row["label"]] = params
        elif row["criterion"] == "symonds":
            bundle.symonds[row["label"]] = params
        else:
            bundle.king[row["label"]] = (params, row["degree"]) if "degree" in row else params
    return bundle


_BUILDERS = {
    "presentation": _build_presentation,
    "morphism": _build_morphism,
    "parameters": _build_parameters,
    "series": _build_series,
    "bundle": _build_bundle,
}


def fixture_names() -> list:
    root = resources.files("cohoc") / "fixtures"
    return sorted(p.name[:-4] for p in root.iterdir() if p.name.endswith(".txt"))


def _read(ref: str, base=None) -> tuple:
    if ref.startswith(FIXTURE_PREFIX):
        name = ref[len(FIXTURE_PREFIX):]
        res = resources.files("cohoc") / "fixtures" / f"{name}.txt"
        if not res.is_file():
            raise DocumentError(f"no fixture named {name!r}")
        return res.read_text(encoding="utf-8"), ref, False
    path = Path(ref)
    if base and not base.startswith(FIXTURE_PREFIX) and not path.is_absolute():
        path = Path(base).parent / path
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return text, str(path), path.suffix == ".json"


_cache = {}


def load_document(ref: str, base: str | None = None) -> Document:
    """Read, schema-check and build a document (building parses every expression)."""
    text, origin, is_json = _read(ref, base)
    key = (origin, text)
    if key in _cache:
        return _cache[key]
    if is_json:
        try:
            tree = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(exc.msg, f"line {exc.lineno}") from None
        where = {}
        if not isinstance(tree, dict):
            raise SchemaError("top level must be an object", "document")
    else:
        tree, where = parse_lines(text)
    validate_tree(tree, where)
    doc = _CLASSES[tree["kind"]](tree, origin)
    doc.build()
    _cache[key] = doc
    return doc


def document_from_tree(tree: dict, origin: str | None = None) -> Document:
    validate_tree(tree)
    doc = _CLASSES[tree["kind"]](tree, origin)
    doc.build()
    return doc


def save_document(doc: Document, path) -> None:
    """Write ``doc`` as JSON if ``path`` ends in .json, else in the line format."""
    path = Path(path)
    text = json.dumps(doc.tree, indent=1) + "\n" if path.suffix == ".json" else format_lines(doc.tree)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot write {path}: {exc.strerror or exc}") from exc


def presentation_document(ring, name=None) -> PresentationDocument:
    """Document for an existing presentation (relations in canonical text)."""
    tree = {"kind": "presentation"}
    if name:
        tree["name"] = name
    tree["characteristic"] = ring.characteristic
    tree["generators"] = [{"name": g.name, "degree": g.degree} for g in ring.generators]
    tree["relations"] = [str(r) for r in ring.relations]
    return document_from_tree(tree)
