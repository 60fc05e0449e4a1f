"""Shipped Spanish suite set: frame x lexicon templates and their expansion.

Each suite is generated from a frame (region templates with ``{slot}``
placeholders) and lexicon entries that carry per-condition surface forms.
The first item of every suite pins the exemplar sentences the suite design
is anchored on; the remaining items vary the lexicon. Expanded documents
ship under ``data/v1/<language>/<circuit>/<slug>.json``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence, Union

from .errors import InconsistentLexicon
from .suites import (
    Circuit,
    Item,
    RegionedSentence,
    TestSuite,
    load_suite,
    render_sentence,
    serialize_suite,
    validate_suite,
)

FormSpec = Union[str, Mapping[str, str]]
Entry = Mapping[str, FormSpec]

DATA_VERSION = "v1"

CIRCUIT_DIRS = {
    Circuit.AGREEMENT: "agreement",
    Circuit.CENTER_EMBEDDING: "center_embedding",
    Circuit.GROSS_SYNTACTIC_STATE: "gross_syntactic_state",
    Circuit.LONG_DISTANCE_DEPENDENCIES: "long_distance_dependencies",
    Circuit.GARDEN_PATH_EFFECTS: "garden_path_effects",
    Circuit.LICENSING: "licensing",
    Circuit.LINEARIZATION: "linearization",
}


@dataclass(frozen=True)
class SuiteTemplate:
    slug: str
    name: str
    circuit: Circuit
    language: str
    has_modifier: bool
    modifier_pair_id: str | None
    region_names: tuple[str, ...]
    condition_names: tuple[str, ...]
    predictions: tuple[str, ...]
    frame: tuple[str, ...]
    # ordered slot groups; items are the product (or zip) of group entries
    slots: tuple[tuple[str, tuple[Entry, ...]], ...]
    mode: str = "product"
    # (condition, expected rendered text of item 1) exemplar sentences
    anchors: tuple[tuple[str, str], ...] = ()


_PLACEHOLDER_RE = re.compile(r"\{(\w+)\}")


def _fill_region(region_template: str, merged: Mapping[str, FormSpec], condition: str) -> str:
    def replace(match: re.Match) -> str:
        placeholder = match.group(1)
        if placeholder not in merged:
            raise lexicon_error(f"frame placeholder {placeholder!r} not supplied by any slot")
        spec = merged[placeholder]
        if isinstance(spec, str):
            return spec
        if condition not in spec:
            raise lexicon_error(
                f"entry for {placeholder!r} has no form for condition {condition!r}"
            )
        return spec[condition]

    def lexicon_error(message: str) -> InconsistentLexicon:
        return InconsistentLexicon(message)

    return _PLACEHOLDER_RE.sub(replace, region_template)


def expand_template(template: SuiteTemplate) -> TestSuite:
    """Expand lexicon entries across the frame; the result passes validation."""
    groups = [entries for _, entries in template.slots]
    if template.mode == "zip":
        lengths = {len(g) for g in groups}
        if len(lengths) != 1:
            raise InconsistentLexicon(
                f"zip mode requires equal-length slot groups, got {sorted(lengths)}"
            )
        combos = list(zip(*groups))
    else:
        combos = list(itertools.product(*groups))

    items = []
    for index, combo in enumerate(combos, 1):
        merged: dict[str, FormSpec] = {}
        for entry in combo:
            merged.update(entry)
        sentences = {
            condition: RegionedSentence(
                tuple(_fill_region(rt, merged, condition) for rt in template.frame)
            )
            for condition in template.condition_names
        }
        items.append(Item(index=index, sentences=sentences))

    suite = TestSuite(
        name=template.name,
        circuit=template.circuit,
        language=template.language,
        has_modifier=template.has_modifier,
        modifier_pair_id=template.modifier_pair_id,
        condition_names=template.condition_names,
        region_names=template.region_names,
        items=tuple(items),
        predictions=template.predictions,
    )
    report = validate_suite(suite)
    if not report.ok:
        raise InconsistentLexicon(
            f"template {template.slug!r} expands to an invalid suite: "
            f"{report.errors[0].message}"
        )
    for condition, expected in template.anchors:
        text, _ = render_sentence(suite.items[0].sentences[condition])
        if text != expected:
            raise InconsistentLexicon(
                f"template {template.slug!r}: anchor for {condition!r} renders "
                f"{text!r}, expected {expected!r}"
            )
    return suite


# =============================== lexical helpers ===============================

_PERSONS = (1, 2, 3)
_SUFFIXES = {
    "ar": ("o", "as", "a", "amos", "áis", "an"),
    "er": ("o", "es", "e", "emos", "éis", "en"),
    "ir": ("o", "es", "e", "imos", "ís", "en"),
}


def _conjugate(lemma: str, person: int, number: str) -> str:
    """Present indicative of a regular -ar/-er/-ir verb."""
    stem, ending = lemma[:-2], lemma[-2:]
    slot = (person - 1) + (3 if number == "pl" else 0)
    return stem + _SUFFIXES[ending][slot]


def _article(gender: str, number: str) -> str:
    return {("m", "sg"): "El", ("f", "sg"): "La",
            ("m", "pl"): "Los", ("f", "pl"): "Las"}[(gender, number)]


def _adjective(lemma_msg: str, gender: str, number: str) -> str:
    """Inflect a regular -o adjective given in masculine singular."""
    base = lemma_msg[:-1]
    return base + {("m", "sg"): "o", ("f", "sg"): "a",
                   ("m", "pl"): "os", ("f", "pl"): "as"}[(gender, number)]


def _flip(number: str) -> str:
    return "pl" if number == "sg" else "sg"


def _other_gender(gender: str) -> str:
    return "f" if gender == "m" else "m"


def _nominal_conditions(lemma_msg: str, gender: str, number: str) -> dict[str, str]:
    """The four agreement variants of an adjective for a (gender, number) head."""
    return {
        "match": _adjective(lemma_msg, gender, number),
        "gender_mismatch": _adjective(lemma_msg, _other_gender(gender), number),
        "number_mismatch": _adjective(lemma_msg, gender, _flip(number)),
        "both_mismatch": _adjective(lemma_msg, _other_gender(gender), _flip(number)),
    }


_NOMINAL_PREDICTIONS = (
    "({r};match) < ({r};gender_mismatch)",
    "({r};match) < ({r};number_mismatch)",
    "({r};match) < ({r};both_mismatch)",
    "({r};gender_mismatch) < ({r};both_mismatch)",
    "({r};number_mismatch) < ({r};both_mismatch)",
)


def _nominal_predictions(region: int) -> tuple[str, ...]:
    return tuple(p.format(r=region) for p in _NOMINAL_PREDICTIONS)


# =============================== Agreement =====================================

def _basic_subject_verb() -> SuiteTemplate:
    entries: list[Entry] = [
        # exemplar forms pinned as published (incl. the unaccented "cocinais")
        {
            "subject": "Tú",
            "verb": {
                "match": "cocinas",
                "person_mismatch": "cocino",
                "number_mismatch": "cocinais",
                "both_mismatch": "cocinan",
            },
        }
    ]
    subjects = (
        ("Yo", 1, "sg"), ("Tú", 2, "sg"), ("Él", 3, "sg"), ("Ella", 3, "sg"),
        ("Nosotros", 1, "pl"), ("Vosotros", 2, "pl"), ("Ellos", 3, "pl"),
        ("Ellas", 3, "pl"),
    )
    for subject, person, number in subjects:
        other_person = person % 3 + 1
        for lemma in ("hablar", "comer", "vivir"):
            entries.append({
                "subject": subject,
                "verb": {
                    "match": _conjugate(lemma, person, number),
                    "person_mismatch": _conjugate(lemma, other_person, number),
                    "number_mismatch": _conjugate(lemma, person, _flip(number)),
                    "both_mismatch": _conjugate(lemma, other_person, _flip(number)),
                },
            })
    return SuiteTemplate(
        slug="basic_subject_verb_agreement",
        name="Basic Subject-Verb Agreement",
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=False,
        modifier_pair_id="agreement_basic_sv",
        region_names=("subject", "verb"),
        condition_names=("match", "person_mismatch", "number_mismatch", "both_mismatch"),
        predictions=(
            "(2;match) < (2;person_mismatch)",
            "(2;match) < (2;number_mismatch)",
            "(2;match) < (2;both_mismatch)",
            "(2;person_mismatch) < (2;both_mismatch)",
            "(2;number_mismatch) < (2;both_mismatch)",
        ),
        frame=("{subject}", "{verb}"),
        slots=(("pair", tuple(entries)),),
        anchors=(
            ("match", "Tú cocinas"),
            ("person_mismatch", "Tú cocino"),
            ("number_mismatch", "Tú cocinais"),
            ("both_mismatch", "Tú cocinan"),
        ),
    )


_SV_RC_CONDITIONS = ("match_sing", "mismatch_sing", "match_plural", "mismatch_plural")
_SV_RC_PREDICTIONS = (
    "(3;match_sing) < (3;mismatch_sing)",
    "(3;match_plural) < (3;mismatch_plural)",
)

# head sg / head pl / RC for singular head / RC for plural head / verb sg / verb pl
_SV_SUBJECT_RC_ROWS = (
    ("El fontanero", "Los fontaneros", "que ayudó a los albañiles",
     "que ayudaron al albañil", "trabaja", "trabajan"),
    ("El médico", "Los médicos", "que atendió a los pacientes",
     "que atendieron al paciente", "descansa", "descansan"),
    ("El profesor", "Los profesores", "que escuchó a los alumnos",
     "que escucharon al alumno", "enseña", "enseñan"),
    ("El jardinero", "Los jardineros", "que plantó los rosales",
     "que plantaron el rosal", "riega", "riegan"),
    ("El cocinero", "Los cocineros", "que probó las salsas",
     "que probaron la salsa", "cocina", "cocinan"),
    ("El abogado", "Los abogados", "que defendió a los acusados",
     "que defendieron al acusado", "madruga", "madrugan"),
    ("El panadero", "Los panaderos", "que amasó los panes",
     "que amasaron el pan", "hornea", "hornean"),
    ("El pintor", "Los pintores", "que retrató a los alcaldes",
     "que retrataron al alcalde", "pinta", "pintan"),
    ("El carpintero", "Los carpinteros", "que barnizó las mesas",
     "que barnizaron la mesa", "lija", "lijan"),
    ("El enfermero", "Los enfermeros", "que vacunó a los niños",
     "que vacunaron al niño", "trasnocha", "trasnochan"),
)

_SV_OBJECT_RC_ROWS = (
    ("El fontanero", "Los fontaneros", "que los albañiles admiraban",
     "que el albañil admiraba", "trabaja", "trabajan"),
    ("El médico", "Los médicos", "que los pacientes apreciaban",
     "que el paciente apreciaba", "descansa", "descansan"),
    ("El profesor", "Los profesores", "que los alumnos respetaban",
     "que el alumno respetaba", "enseña", "enseñan"),
    ("El jardinero", "Los jardineros", "que los vecinos saludaban",
     "que el vecino saludaba", "riega", "riegan"),
    ("El cocinero", "Los cocineros", "que los clientes elogiaban",
     "que el cliente elogiaba", "cocina", "cocinan"),
    ("El abogado", "Los abogados", "que los jueces conocían",
     "que el juez conocía", "madruga", "madrugan"),
    ("El panadero", "Los panaderos", "que los niños observaban",
     "que el niño observaba", "hornea", "hornean"),
    ("El pintor", "Los pintores", "que los críticos alababan",
     "que el crítico alababa", "pinta", "pintan"),
    ("El carpintero", "Los carpinteros", "que los aprendices imitaban",
     "que el aprendiz imitaba", "lija", "lijan"),
    ("El enfermero", "Los enfermeros", "que los doctores valoraban",
     "que el doctor valoraba", "trasnocha", "trasnochan"),
)


def _sv_rc_template(slug: str, name: str, rows, anchors=()) -> SuiteTemplate:
    core = tuple(
        {
            "subject": {
                "match_sing": head_sg, "mismatch_sing": head_sg,
                "match_plural": head_pl, "mismatch_plural": head_pl,
            },
            "rc": {
                "match_sing": rc_sg, "mismatch_sing": rc_sg,
                "match_plural": rc_pl, "mismatch_plural": rc_pl,
            },
            "verb": {
                "match_sing": verb_sg, "mismatch_sing": verb_pl,
                "match_plural": verb_pl, "mismatch_plural": verb_sg,
            },
        }
        for head_sg, head_pl, rc_sg, rc_pl, verb_sg, verb_pl in rows
    )
    continuations = ({"continuation": "los sábados."}, {"continuation": "todas las semanas."})
    return SuiteTemplate(
        slug=slug,
        name=name,
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=True,
        modifier_pair_id="agreement_basic_sv",
        region_names=("subject", "relative_clause", "verb", "continuation"),
        condition_names=_SV_RC_CONDITIONS,
        predictions=_SV_RC_PREDICTIONS,
        frame=("{subject}", "{rc}", "{verb}", "{continuation}"),
        slots=(("core", core), ("continuation", continuations)),
        anchors=anchors,
    )


def _sv_subject_rc() -> SuiteTemplate:
    return _sv_rc_template(
        "subject_verb_agreement_subject_rc",
        "Subject-Verb Agreement with Subject Relative Clause",
        _SV_SUBJECT_RC_ROWS,
        anchors=(
            ("match_sing", "El fontanero que ayudó a los albañiles trabaja los sábados."),
            ("mismatch_sing", "El fontanero que ayudó a los albañiles trabajan los sábados."),
            ("match_plural", "Los fontaneros que ayudaron al albañil trabajan los sábados."),
            ("mismatch_plural", "Los fontaneros que ayudaron al albañil trabaja los sábados."),
        ),
    )


def _sv_object_rc() -> SuiteTemplate:
    return _sv_rc_template(
        "subject_verb_agreement_object_rc",
        "Subject-Verb Agreement with Object Relative Clause",
        _SV_OBJECT_RC_ROWS,
    )


def _determiner_noun() -> SuiteTemplate:
    nouns = (
        ("gato", "m", "sg"), ("perro", "m", "sg"), ("libro", "m", "sg"),
        ("coche", "m", "sg"), ("zapato", "m", "sg"),
        ("mesa", "f", "sg"), ("casa", "f", "sg"), ("silla", "f", "sg"),
        ("ventana", "f", "sg"), ("puerta", "f", "sg"),
        ("platos", "m", "pl"), ("vasos", "m", "pl"), ("caminos", "m", "pl"),
        ("relojes", "m", "pl"), ("cuadros", "m", "pl"),
        ("flores", "f", "pl"), ("llaves", "f", "pl"), ("botellas", "f", "pl"),
        ("camisas", "f", "pl"), ("tazas", "f", "pl"),
    )
    entries = tuple(
        {
            "article": {
                "match": _article(g, n),
                "gender_mismatch": _article(_other_gender(g), n),
                "number_mismatch": _article(g, _flip(n)),
                "both_mismatch": _article(_other_gender(g), _flip(n)),
            },
            "noun": noun,
        }
        for noun, g, n in nouns
    )
    return SuiteTemplate(
        slug="determiner_noun_agreement",
        name="Determiner-Noun Agreement",
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("determiner", "noun"),
        condition_names=("match", "gender_mismatch", "number_mismatch", "both_mismatch"),
        predictions=_nominal_predictions(2),
        frame=("{article}", "{noun}"),
        slots=(("pair", entries),),
        anchors=(
            ("match", "El gato"),
            ("gender_mismatch", "La gato"),
            ("number_mismatch", "Los gato"),
            ("both_mismatch", "Las gato"),
        ),
    )


def _adjective_noun() -> SuiteTemplate:
    rows = (
        ("La tienda vende", "discos", "m", "pl", "usado"),
        ("El mercado ofrece", "frutas", "f", "pl", "fresco"),
        ("La fábrica produce", "coches", "m", "pl", "moderno"),
        ("El agricultor cosecha", "tomates", "m", "pl", "maduro"),
        ("La modista cose", "camisas", "f", "pl", "blanco"),
        ("El anticuario restaura", "relojes", "m", "pl", "antiguo"),
        ("La librería exhibe", "novelas", "f", "pl", "nuevo"),
        ("El chef prepara", "platos", "m", "pl", "exquisito"),
        ("La bodega guarda", "botellas", "f", "pl", "viejo"),
        ("El artesano talla", "figuras", "f", "pl", "pequeño"),
        ("La floristería vende", "rosas", "f", "pl", "rojo"),
        ("El museo conserva", "cuadros", "m", "pl", "famoso"),
        ("La pastelería hornea", "pasteles", "m", "pl", "cremoso"),
        ("El sastre arregla", "pantalones", "m", "pl", "estrecho"),
        ("La tienda expone", "lámparas", "f", "pl", "dorado"),
        ("El vendedor muestra", "alfombras", "f", "pl", "lujoso"),
        ("La cooperativa envasa", "aceitunas", "f", "pl", "negro"),
        ("El taller repara", "bicicletas", "f", "pl", "rápido"),
        ("La imprenta encuaderna", "libros", "m", "pl", "grueso"),
        ("El joyero pule", "anillos", "m", "pl", "precioso"),
    )
    entries = tuple(
        {"intro": intro, "noun": noun, "adj": _nominal_conditions(adj, g, n)}
        for intro, noun, g, n, adj in rows
    )
    return SuiteTemplate(
        slug="adjective_noun_agreement",
        name="Adjective-Noun Agreement",
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("introduction", "noun", "adjective"),
        condition_names=("match", "gender_mismatch", "number_mismatch", "both_mismatch"),
        predictions=_nominal_predictions(3),
        frame=("{intro}", "{noun}", "{adj}"),
        slots=(("row", entries),),
        anchors=(
            ("match", "La tienda vende discos usados"),
            ("gender_mismatch", "La tienda vende discos usadas"),
            ("number_mismatch", "La tienda vende discos usado"),
            ("both_mismatch", "La tienda vende discos usada"),
        ),
    )


# subject / gender / number / copula / adjective lemma
_ATTRIBUTE_ROWS = (
    ("El piso", "m", "sg", "está", "vacío"),
    ("La casa", "f", "sg", "está", "limpio"),
    ("Los platos", "m", "pl", "están", "sucio"),
    ("Las ventanas", "f", "pl", "están", "abierto"),
    ("El horno", "m", "sg", "está", "encendido"),
    ("La puerta", "f", "sg", "está", "cerrado"),
    ("Los pasillos", "m", "pl", "están", "oscuro"),
    ("Las paredes", "f", "pl", "son", "blanco"),
    ("El jardín", "m", "sg", "está", "descuidado"),
    ("La nevera", "f", "sg", "está", "lleno"),
    ("Los vasos", "m", "pl", "están", "roto"),
    ("Las cortinas", "f", "pl", "son", "nuevo"),
    ("El sótano", "m", "sg", "está", "húmedo"),
    ("La cocina", "f", "sg", "está", "ordenado"),
    ("Los balcones", "m", "pl", "están", "adornado"),
    ("Las escaleras", "f", "pl", "son", "empinado"),
    ("El desván", "m", "sg", "está", "polvoriento"),
    ("La fachada", "f", "sg", "está", "agrietado"),
    ("Los armarios", "m", "pl", "están", "desordenado"),
    ("Las persianas", "f", "pl", "están", "bajado"),
)

_ATTRIBUTE_OBJECT_RCS = (
    "que las señoras compraron", "que los albañiles reformaron",
    "que la cocinera fregó", "que el carpintero instaló",
    "que las panaderas usaban", "que los cerrajeros ajustaron",
    "que la portera barría", "que el pintor preparó",
    "que las vecinas admiraban", "que los técnicos revisaron",
    "que la camarera sirvió", "que el decorador eligió",
    "que las inquilinas evitaban", "que los fontaneros inspeccionaron",
    "que la florista decoró", "que el conserje fregaba",
    "que las abuelas recordaban", "que los obreros restauraron",
    "que la carpintera montó", "que el instalador colocó",
)

_ATTRIBUTE_SUBJECT_RCS = (
    "que fascinó a las señoras", "que impresionó a los albañiles",
    "que pertenecían a la cocinera", "que molestaban al carpintero",
    "que servía a las panaderas", "que preocupaba a los cerrajeros",
    "que asustaban a la portera", "que rodeaban al pintor",
    "que encantaba a las vecinas", "que sorprendió a los técnicos",
    "que gustaban a la camarera", "que protegían al decorador",
    "que inquietaba a las inquilinas", "que agradaba a los fontaneros",
    "que atraían a la florista", "que cansaban al conserje",
    "que intrigaba a las abuelas", "que enorgullecía a los obreros",
    "que estorbaban a la carpintera", "que irritaban al instalador",
)


def _attribute_entries() -> tuple[Entry, ...]:
    return tuple(
        {
            "subject": subject,
            "copula": copula,
            "adj": _nominal_conditions(adj, g, n),
        }
        for subject, g, n, copula, adj in _ATTRIBUTE_ROWS
    )


def _attribute() -> SuiteTemplate:
    return SuiteTemplate(
        slug="attribute_agreement",
        name="Attribute Agreement",
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=False,
        modifier_pair_id="agreement_attribute",
        region_names=("subject", "copula", "adjective"),
        condition_names=("match", "gender_mismatch", "number_mismatch", "both_mismatch"),
        predictions=_nominal_predictions(3),
        frame=("{subject}", "{copula}", "{adj}"),
        slots=(("row", _attribute_entries()),),
        anchors=(
            ("match", "El piso está vacío"),
            ("gender_mismatch", "El piso está vacía"),
            ("number_mismatch", "El piso está vacíos"),
            ("both_mismatch", "El piso está vacías"),
        ),
    )


def _attribute_rc(slug: str, name: str, rcs: Sequence[str]) -> SuiteTemplate:
    entries = tuple(
        {
            "subject": subject,
            "rc": rc,
            "copula": copula,
            "adj": _nominal_conditions(adj, g, n),
        }
        for (subject, g, n, copula, adj), rc in zip(_ATTRIBUTE_ROWS, rcs, strict=True)
    )
    return SuiteTemplate(
        slug=slug,
        name=name,
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=True,
        modifier_pair_id="agreement_attribute",
        region_names=("subject", "relative_clause", "copula", "adjective"),
        condition_names=("match", "gender_mismatch", "number_mismatch", "both_mismatch"),
        predictions=_nominal_predictions(4),
        frame=("{subject}", "{rc}", "{copula}", "{adj}"),
        slots=(("row", entries),),
    )


def _predicative() -> SuiteTemplate:
    rows = (
        ("Los niños", "m", "pl", "llegaron", "cansado"),
        ("Las atletas", "f", "pl", "terminaron", "agotado"),
        ("El viajero", "m", "sg", "volvió", "enfermo"),
        ("La bailarina", "f", "sg", "salió", "mareado"),
        ("Los soldados", "m", "pl", "regresaron", "herido"),
        ("Las cocineras", "f", "pl", "acabaron", "satisfecho"),
        ("El corredor", "m", "sg", "llegó", "sediento"),
        ("La estudiante", "f", "sg", "salió", "preocupado"),
        ("Los pescadores", "m", "pl", "volvieron", "empapado"),
        ("Las enfermeras", "f", "pl", "terminaron", "exhausto"),
        ("El abuelo", "m", "sg", "despertó", "confundido"),
        ("La niña", "f", "sg", "regresó", "contento"),
        ("Los actores", "m", "pl", "salieron", "nervioso"),
        ("Las turistas", "f", "pl", "llegaron", "sorprendido"),
        ("El minero", "m", "sg", "subió", "sucio"),
        ("La gimnasta", "f", "sg", "acabó", "dolorido"),
        ("Los alumnos", "m", "pl", "volvieron", "aburrido"),
        ("Las vecinas", "f", "pl", "despertaron", "asustado"),
        ("El músico", "m", "sg", "terminó", "afónico"),
        ("La doctora", "f", "sg", "salió", "apurado"),
    )
    entries = tuple(
        {"subject": subject, "verb": verb, "adj": _nominal_conditions(adj, g, n)}
        for subject, g, n, verb, adj in rows
    )
    return SuiteTemplate(
        slug="predicative_agreement",
        name="Predicative Agreement",
        circuit=Circuit.AGREEMENT,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("subject", "verb", "adjective"),
        condition_names=("match", "gender_mismatch", "number_mismatch", "both_mismatch"),
        predictions=_nominal_predictions(3),
        frame=("{subject}", "{verb}", "{adj}"),
        slots=(("row", entries),),
        anchors=(
            ("match", "Los niños llegaron cansados"),
            ("gender_mismatch", "Los niños llegaron cansadas"),
            ("number_mismatch", "Los niños llegaron cansado"),
            ("both_mismatch", "Los niños llegaron cansada"),
        ),
    )


# =============================== Center Embedding ===============================

# head NP / embedded subject / embedded verb / main verb
_CENTER_EMBEDDING_ROWS = (
    ("La tormenta", "el capitán", "capeó", "amainó", "del barco"),
    ("El contrato", "el abogado", "redactó", "expiró", "del bufete"),
    ("La novela", "la autora", "escribió", "triunfó", "de la editorial"),
    ("El puente", "el ingeniero", "diseñó", "resistió", "de la empresa"),
    ("La sopa", "el cocinero", "preparó", "hirvió", "del restaurante"),
    ("El incendio", "el bombero", "apagó", "cesó", "de la brigada"),
    ("La deuda", "el empresario", "contrajo", "creció", "de la ciudad"),
    ("El muro", "el albañil", "levantó", "cayó", "de la obra"),
    ("La canción", "la cantante", "compuso", "sonó", "del grupo"),
    ("El rumor", "el periodista", "difundió", "circuló", "del diario"),
    ("El árbol", "el jardinero", "plantó", "floreció", "del parque"),
    ("La herida", "el médico", "trató", "sanó", "del hospital"),
    ("El motor", "el mecánico", "reparó", "arrancó", "del taller"),
    ("La masa", "el panadero", "amasó", "fermentó", "del barrio"),
    ("El cuadro", "el pintor", "restauró", "envejeció", "del museo"),
    ("La ley", "el diputado", "propuso", "fracasó", "de la oposición"),
    ("El barco", "el marinero", "gobernó", "naufragó", "del puerto"),
    ("El trigo", "el agricultor", "sembró", "creció", "del valle"),
    ("El virus", "la científica", "estudió", "mutó", "del laboratorio"),
    ("El edificio", "el arquitecto", "proyectó", "ardió", "del estudio"),
)


def _center_embedding_entries(with_pp: bool) -> tuple[Entry, ...]:
    entries = []
    for head, subject, v_embedded, v_main, pp in _CENTER_EMBEDDING_ROWS:
        entry: dict[str, FormSpec] = {
            "head": head,
            "emb_subject": subject,
            "verbs": {
                "plausible": f"{v_embedded} {v_main}.",
                "implausible": f"{v_main} {v_embedded}.",
            },
        }
        if with_pp:
            entry["pp"] = pp
        entries.append(entry)
    return tuple(entries)


def _center_embedding() -> SuiteTemplate:
    return SuiteTemplate(
        slug="center_embedding",
        name="Center Embedding",
        circuit=Circuit.CENTER_EMBEDDING,
        language="es",
        has_modifier=False,
        modifier_pair_id="center_embedding",
        region_names=("head_noun_phrase", "embedded_clause_start", "verbs"),
        condition_names=("plausible", "implausible"),
        predictions=("(3;plausible) < (3;implausible)",),
        frame=("{head}", "que {emb_subject}", "{verbs}"),
        slots=(("row", _center_embedding_entries(with_pp=False)),),
        anchors=(
            ("plausible", "La tormenta que el capitán capeó amainó."),
            ("implausible", "La tormenta que el capitán amainó capeó."),
        ),
    )


def _center_embedding_pp() -> SuiteTemplate:
    return SuiteTemplate(
        slug="center_embedding_pp_modifier",
        name="Center Embedding with PP Modifier",
        circuit=Circuit.CENTER_EMBEDDING,
        language="es",
        has_modifier=True,
        modifier_pair_id="center_embedding",
        region_names=("head_noun_phrase", "embedded_clause_start", "pp_modifier", "verbs"),
        condition_names=("plausible", "implausible"),
        predictions=("(4;plausible) < (4;implausible)",),
        frame=("{head}", "que {emb_subject}", "{pp}", "{verbs}"),
        slots=(("row", _center_embedding_entries(with_pp=True)),),
    )


# =============================== Gross Syntactic State ==========================

_SUBORDINATION_CONDITIONS = ("sub_matrix", "no_sub_matrix", "sub_no_matrix", "no_sub_no_matrix")
_SUBORDINATION_PREDICTIONS = (
    "(3;sub_no_matrix) > (3;no_sub_no_matrix)",
    "(3;sub_matrix) < (3;no_sub_matrix)",
)

# first clause / matrix clause
_SUBORDINATION_ROWS = (
    ("ella miraba los resultados", "el doctor entró en la habitación."),
    ("el niño dormía la siesta", "su madre preparaba la cena."),
    ("los obreros descansaban a la sombra", "el capataz revisaba los planos."),
    ("la orquesta afinaba los instrumentos", "el público ocupaba sus asientos."),
    ("el tren cruzaba el valle", "los pasajeros contemplaban el paisaje."),
    ("la profesora corregía los exámenes", "los alumnos repasaban la lección."),
    ("el panadero encendía el horno", "su ayudante pesaba la harina."),
    ("los turistas recorrían el museo", "el guía explicaba los cuadros."),
    ("la lluvia golpeaba los cristales", "el abuelo leía junto al fuego."),
    ("el jurado deliberaba en la sala", "los abogados esperaban el veredicto."),
)

# subject NP / subject RC / object RC / rest of first clause / matrix clause
_SUBORDINATION_RC_ROWS = (
    ("la doctora", "que atendía a los pacientes", "que los pacientes admiraban",
     "miraba los resultados", "el doctor entró en la habitación."),
    ("la enfermera", "que cuidaba a los ancianos", "que los ancianos querían",
     "repasaba las notas", "el celador cerró la puerta."),
    ("el vigilante", "que observaba a los visitantes", "que los visitantes saludaban",
     "recorría el pasillo", "la alarma sonó de repente."),
    ("la maestra", "que enseñaba a los alumnos", "que los alumnos escuchaban",
     "corregía los deberes", "el director llamó a clase."),
    ("el camarero", "que servía a los clientes", "que los clientes conocían",
     "limpiaba la barra", "el cocinero apagó los fogones."),
    ("la bibliotecaria", "que orientaba a los lectores", "que los lectores consultaban",
     "ordenaba los estantes", "el bedel apagó las luces."),
    ("el portero", "que ayudaba a los vecinos", "que los vecinos apreciaban",
     "barría la entrada", "el cartero dejó un paquete."),
    ("la panadera", "que atendía a los madrugadores", "que los madrugadores esperaban",
     "amasaba el pan", "su ayudante encendió el horno."),
    ("el guía", "que acompañaba a los turistas", "que los turistas seguían",
     "explicaba la ruta", "el conductor arrancó el autobús."),
    ("la jueza", "que escuchaba a los testigos", "que los testigos temían",
     "revisaba el expediente", "el fiscal pidió la palabra."),
)

_SUBORDINATORS = ("Mientras", "Cuando")


def _subordination_entry(clause: str, matrix: str) -> Entry:
    return {
        "clause": {
            "sub_matrix": f"{clause},",
            "no_sub_matrix": f"{clause},",
            "sub_no_matrix": clause,
            "no_sub_no_matrix": clause,
        },
        "continuation": {
            "sub_matrix": matrix,
            "no_sub_matrix": matrix,
            "sub_no_matrix": ".",
            "no_sub_no_matrix": ".",
        },
    }


def _subordinator_entries() -> tuple[Entry, ...]:
    return tuple(
        {
            "sub": {
                "sub_matrix": sub, "no_sub_matrix": "",
                "sub_no_matrix": sub, "no_sub_no_matrix": "",
            }
        }
        for sub in _SUBORDINATORS
    )


def _subordination_template(slug: str, name: str, has_modifier: bool,
                            entries: Sequence[Entry], anchors=()) -> SuiteTemplate:
    return SuiteTemplate(
        slug=slug,
        name=name,
        circuit=Circuit.GROSS_SYNTACTIC_STATE,
        language="es",
        has_modifier=has_modifier,
        modifier_pair_id="gss_subordination",
        region_names=("subordinator", "first_clause", "continuation"),
        condition_names=_SUBORDINATION_CONDITIONS,
        predictions=_SUBORDINATION_PREDICTIONS,
        frame=("{sub}", "{clause}", "{continuation}"),
        slots=(("core", tuple(entries)), ("sub", _subordinator_entries())),
        anchors=anchors,
    )


def _subordination() -> SuiteTemplate:
    entries = [_subordination_entry(clause, matrix) for clause, matrix in _SUBORDINATION_ROWS]
    return _subordination_template(
        "subordination",
        "Subordination",
        False,
        entries,
        anchors=(
            ("sub_matrix", "Mientras ella miraba los resultados, el doctor entró en la habitación."),
            ("no_sub_matrix", "ella miraba los resultados, el doctor entró en la habitación."),
        ),
    )


def _subordination_rc(slug: str, name: str, use_subject_rc: bool) -> SuiteTemplate:
    entries = []
    for np, subj_rc, obj_rc, rest, matrix in _SUBORDINATION_RC_ROWS:
        rc = subj_rc if use_subject_rc else obj_rc
        entries.append(_subordination_entry(f"{np} {rc} {rest}", matrix))
    return _subordination_template(slug, name, True, entries)


# =========================== Long-Distance Dependencies ==========================

_FILLER_GAP_CONDITIONS = ("what_gap", "that_gap", "what_nogap", "that_nogap")

# intro / embedded subject+verb / object / continuation
_FILLER_GAP_ROWS = (
    ("Yo sé", "tu amigo tiró", "una colilla", "al suelo."),
    ("Yo sé", "la niña dejó", "una muñeca", "en el banco."),
    ("Ellos saben", "el camarero sirvió", "un refresco", "en la terraza."),
    ("Nosotros sabemos", "tu vecino guardó", "una escoba", "en el trastero."),
    ("Ella sabe", "el alumno copió", "un poema", "en la pizarra."),
    ("Tú sabes", "mi hermano escondió", "un regalo", "en el armario."),
    ("Él sabe", "la artista colgó", "un lienzo", "en la galería."),
    ("Yo sé", "el pescador lanzó", "una red", "al agua."),
    ("Ellas saben", "tu prima olvidó", "un paraguas", "en el tren."),
    ("Usted sabe", "el jardinero enterró", "una semilla", "en la maceta."),
    ("Yo sé", "la cocinera vertió", "una salsa", "en la cazuela."),
    ("Vosotros sabéis", "el cartero metió", "una carta", "en el buzón."),
    ("Ella sabe", "mi tío aparcó", "una furgoneta", "en la acera."),
    ("Yo sé", "el niño pegó", "una pegatina", "en la nevera."),
    ("Tú sabes", "la abuela tejió", "una bufanda", "para el invierno."),
    ("Él sabe", "el técnico instaló", "una antena", "en el tejado."),
    ("Nosotros sabemos", "la florista plantó", "un rosal", "en el patio."),
    ("Yo sé", "tu colega archivó", "un informe", "en la carpeta."),
    ("Ellos saben", "el mozo cargó", "un baúl", "en el carro."),
    ("Ella sabe", "mi suegra horneó", "un bizcocho", "para la merienda."),
)

_EMBEDDING_CHAINS = (
    "Juan dijo que María creía que Pedro pensaba que",
    "Ana afirmó que Luis suponía que Marta recordaba que",
)


def _filler_entry() -> Entry:
    return {
        "filler": {
            "what_gap": "lo que", "what_nogap": "lo que",
            "that_gap": "que", "that_nogap": "que",
        }
    }


def _object_entry(obj: str) -> FormSpec:
    return {
        "what_gap": "", "that_gap": "",
        "what_nogap": obj, "that_nogap": obj,
    }


def _filler_gap_basic() -> SuiteTemplate:
    entries = tuple(
        {
            "intro": intro,
            "sv": sv,
            "object": _object_entry(obj),
            "continuation": cont,
            **_filler_entry(),
        }
        for intro, sv, obj, cont in _FILLER_GAP_ROWS
    )
    return SuiteTemplate(
        slug="basic_filler_gap_dependencies",
        name="Basic Filler-Gap Dependencies",
        circuit=Circuit.LONG_DISTANCE_DEPENDENCIES,
        language="es",
        has_modifier=False,
        modifier_pair_id="ldd_filler_gap",
        region_names=("introduction", "filler", "embedded_subject_verb", "object", "continuation"),
        condition_names=_FILLER_GAP_CONDITIONS,
        predictions=(
            "(4;what_nogap) > (4;that_nogap)",
            "(5;what_gap) < (5;that_gap)",
        ),
        frame=("{intro}", "{filler}", "{sv}", "{object}", "{continuation}"),
        slots=(("row", entries),),
        anchors=(
            ("what_gap", "Yo sé lo que tu amigo tiró al suelo."),
            ("that_nogap", "Yo sé que tu amigo tiró una colilla al suelo."),
        ),
    )


def _filler_gap_embeddings() -> SuiteTemplate:
    core = tuple(
        {
            "intro": intro,
            "sv": sv,
            "object": _object_entry(obj),
            "continuation": cont,
            **_filler_entry(),
        }
        for intro, sv, obj, cont in _FILLER_GAP_ROWS[:10]
    )
    chains = tuple({"chain": chain} for chain in _EMBEDDING_CHAINS)
    return SuiteTemplate(
        slug="filler_gap_three_embeddings",
        name="Filler-Gap Dependencies with Three Sentencial Embeddings",
        circuit=Circuit.LONG_DISTANCE_DEPENDENCIES,
        language="es",
        has_modifier=True,
        modifier_pair_id="ldd_filler_gap",
        region_names=(
            "introduction", "filler", "embeddings",
            "embedded_subject_verb", "object", "continuation",
        ),
        condition_names=_FILLER_GAP_CONDITIONS,
        predictions=(
            "(5;what_nogap) > (5;that_nogap)",
            "(6;what_gap) < (6;that_gap)",
        ),
        frame=("{intro}", "{filler}", "{chain}", "{sv}", "{object}", "{continuation}"),
        slots=(("core", core), ("chain", chains)),
    )


def _pseudo_cleft() -> SuiteTemplate:
    light_forms = {
        "yo": "hice", "tú": "hiciste", "él": "hizo", "ella": "hizo",
        "nosotros": "hicimos", "vosotros": "hicisteis",
        "ellos": "hicieron", "ellas": "hicieron",
    }
    rows = (
        ("tú", "difundiste", "un rumor", "confirmar"),
        ("ella", "escribió", "una carta", "enviar"),
        ("él", "pintó", "un retrato", "vender"),
        ("ellos", "cantaron", "una copla", "ensayar"),
        ("tú", "cocinaste", "un guiso", "probar"),
        ("ella", "diseñó", "un vestido", "coser"),
        ("él", "compuso", "una melodía", "grabar"),
        ("ellas", "plantaron", "un rosal", "regar"),
        ("tú", "escondiste", "un tesoro", "buscar"),
        ("él", "talló", "una figura", "pulir"),
        ("ella", "horneó", "un pastel", "decorar"),
        ("ellos", "levantaron", "un muro", "pintar"),
        ("tú", "tradujiste", "un cuento", "publicar"),
        ("ella", "bordó", "un mantel", "planchar"),
        ("él", "afinó", "un piano", "tocar"),
        ("ellas", "cosieron", "una bandera", "izar"),
        ("tú", "dibujaste", "un plano", "revisar"),
        ("él", "destiló", "un licor", "envasar"),
        ("ella", "modeló", "una vasija", "cocer"),
        ("ellos", "asaron", "un cordero", "trinchar"),
    )
    entries = tuple(
        {
            "pronoun": pronoun,
            "verb": {
                "np_heavy": heavy, "vp_heavy": heavy,
                "np_light": light_forms[pronoun], "vp_light": light_forms[pronoun],
            },
            "extracted": {
                "np_heavy": f"{np}.", "np_light": f"{np}.",
                "vp_heavy": f"{vp} {np}.", "vp_light": f"{vp} {np}.",
            },
        }
        for pronoun, heavy, np, vp in rows
    )
    return SuiteTemplate(
        slug="pseudo_cleft_structures",
        name="Pseudo-Cleft Structures",
        circuit=Circuit.LONG_DISTANCE_DEPENDENCIES,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("cleft_start", "subject", "cleft_verb", "copula", "extracted"),
        condition_names=("np_heavy", "np_light", "vp_light", "vp_heavy"),
        predictions=(
            "(5;vp_light) < (5;vp_heavy)",
            "(5;np_light) > (5;np_heavy)",
            "((5;vp_heavy) - (5;vp_light)) > ((5;np_light) - (5;np_heavy))",
        ),
        frame=("Lo que", "{pronoun}", "{verb}", "fue", "{extracted}"),
        slots=(("row", entries),),
        anchors=(
            ("np_heavy", "Lo que tú difundiste fue un rumor."),
            ("np_light", "Lo que tú hiciste fue un rumor."),
            ("vp_light", "Lo que tú hiciste fue confirmar un rumor."),
            ("vp_heavy", "Lo que tú difundiste fue confirmar un rumor."),
        ),
    )


# =============================== Garden Path Effects =============================

# intro / transitive verb / object / intransitive verb / NP / main verb / continuation
_NPZ_ROWS = (
    ("Mientras ella", "leía", "un libro", "dormía",
     "sus manuscritos", "se volaron", "por la ventana."),
    ("Mientras el niño", "comía", "una manzana", "bostezaba",
     "sus juguetes", "se cayeron", "de la estantería."),
    ("Mientras la abuela", "cosía", "un botón", "dormitaba",
     "sus gafas", "se perdieron", "entre los cojines."),
    ("Mientras el pintor", "mezclaba", "una pintura", "estornudaba",
     "sus pinceles", "se secaron", "en el bote."),
    ("Mientras la cocinera", "pelaba", "una cebolla", "tosía",
     "sus guisos", "se quemaron", "en el horno."),
    ("Mientras el escritor", "corregía", "un capítulo", "suspiraba",
     "sus notas", "se traspapelaron", "en el despacho."),
    ("Mientras la niña", "dibujaba", "un castillo", "sonreía",
     "sus lápices", "se gastaron", "poco a poco."),
    ("Mientras el pescador", "remendaba", "una red", "tiritaba",
     "sus botas", "se mojaron", "con la marea."),
    ("Mientras la florista", "envolvía", "un ramo", "resoplaba",
     "sus tijeras", "se oxidaron", "junto al fregadero."),
    ("Mientras el músico", "afinaba", "una guitarra", "roncaba",
     "sus partituras", "se desordenaron", "con la corriente."),
    ("Mientras la doctora", "firmaba", "un informe", "parpadeaba",
     "sus pacientes", "se impacientaron", "en la sala."),
    ("Mientras el jardinero", "podaba", "un seto", "jadeaba",
     "sus herramientas", "se extraviaron", "entre la hierba."),
    ("Mientras la maestra", "borraba", "una pizarra", "carraspeaba",
     "sus alumnos", "se alborotaron", "en el aula."),
    ("Mientras el panadero", "amasaba", "una hogaza", "madrugaba",
     "sus bollos", "se enfriaron", "en la bandeja."),
    ("Mientras la periodista", "redactaba", "una crónica", "trasnochaba",
     "sus fuentes", "se esfumaron", "sin dejar rastro."),
    ("Mientras el carpintero", "serraba", "una tabla", "tosía",
     "sus clavos", "se desparramaron", "por el taller."),
    ("Mientras la modista", "hilvanaba", "una falda", "dormitaba",
     "sus patrones", "se arrugaron", "bajo la plancha."),
    ("Mientras el bibliotecario", "sellaba", "un préstamo", "bostezaba",
     "sus fichas", "se mezclaron", "en el cajón."),
    ("Mientras la campesina", "ordeñaba", "una vaca", "madrugaba",
     "sus cántaros", "se volcaron", "en el establo."),
    ("Mientras el relojero", "ajustaba", "una correa", "parpadeaba",
     "sus piezas", "se dispersaron", "sobre la mesa."),
)

_NPZ_REGIONS = ("subordinate_start", "subordinate_verb", "noun_phrase", "main_verb", "continuation")
_NPZ_FRAME = ("{intro}", "{critical}", "{np}", "{main_verb}", "{continuation}")


def _npz_overt_object() -> SuiteTemplate:
    entries = tuple(
        {
            "intro": intro,
            "critical": {
                "no_obj_no_comma": v_trans,
                "no_obj_comma": f"{v_trans},",
                "obj_no_comma": f"{v_trans} {obj}",
                "obj_comma": f"{v_trans} {obj},",
            },
            "np": np,
            "main_verb": main_verb,
            "continuation": cont,
        }
        for intro, v_trans, obj, _, np, main_verb, cont in _NPZ_ROWS
    )
    return SuiteTemplate(
        slug="npz_garden_path_overt_object",
        name="NP/Z Garden Path Effect (Overt Object)",
        circuit=Circuit.GARDEN_PATH_EFFECTS,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=_NPZ_REGIONS,
        condition_names=("no_obj_no_comma", "no_obj_comma", "obj_no_comma", "obj_comma"),
        predictions=(
            "(4;no_obj_no_comma) > (4;no_obj_comma)",
            "(4;no_obj_no_comma) > (4;obj_no_comma)",
            "((4;no_obj_no_comma) - (4;no_obj_comma)) > ((4;obj_no_comma) - (4;obj_comma))",
        ),
        frame=_NPZ_FRAME,
        slots=(("row", entries),),
        anchors=(
            ("no_obj_no_comma", "Mientras ella leía sus manuscritos se volaron por la ventana."),
            ("no_obj_comma", "Mientras ella leía, sus manuscritos se volaron por la ventana."),
            ("obj_no_comma", "Mientras ella leía un libro sus manuscritos se volaron por la ventana."),
        ),
    )


def _npz_intransitive() -> SuiteTemplate:
    entries = tuple(
        {
            "intro": intro,
            "critical": {
                "trans_no_comma": v_trans,
                "trans_comma": f"{v_trans},",
                "intrans_no_comma": v_intrans,
                "intrans_comma": f"{v_intrans},",
            },
            "np": np,
            "main_verb": main_verb,
            "continuation": cont,
        }
        for intro, v_trans, _, v_intrans, np, main_verb, cont in _NPZ_ROWS
    )
    return SuiteTemplate(
        slug="npz_garden_path_intransitive",
        name="NP/Z Garden Path Effect (Intransitive Verb)",
        circuit=Circuit.GARDEN_PATH_EFFECTS,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=_NPZ_REGIONS,
        condition_names=("trans_no_comma", "trans_comma", "intrans_no_comma", "intrans_comma"),
        predictions=(
            "(4;trans_no_comma) > (4;trans_comma)",
            "(4;trans_no_comma) > (4;intrans_no_comma)",
            "((4;trans_no_comma) - (4;trans_comma)) > ((4;intrans_no_comma) - (4;intrans_comma))",
        ),
        frame=_NPZ_FRAME,
        slots=(("row", entries),),
        anchors=(
            ("trans_no_comma", "Mientras ella leía sus manuscritos se volaron por la ventana."),
            ("intrans_no_comma", "Mientras ella dormía sus manuscritos se volaron por la ventana."),
            ("trans_comma", "Mientras ella leía, sus manuscritos se volaron por la ventana."),
        ),
    )


# =============================== Licensing ======================================

def _negative_polarity_items() -> SuiteTemplate:
    rows = (
        ("Tú", "mirabas por la ventana", "has visto", "a nadie."),
        ("Tú", "escuchabas la radio", "has oído", "nada."),
        ("Vosotros", "salíais de casa", "habéis saludado", "a nadie."),
        ("Tú", "encendías la luz", "has encontrado", "nada."),
        ("Ellos", "vigilaban la entrada", "han dejado pasar", "a nadie."),
        ("Tú", "revisabas el correo", "has contestado", "a nadie."),
        ("Ella", "recorría los pasillos", "ha descubierto", "nada."),
        ("Nosotros", "esperábamos en el andén", "hemos reconocido", "a nadie."),
        ("Tú", "ordenabas los cajones", "has tirado", "nada."),
        ("Ellas", "paseaban por el parque", "han molestado", "a nadie."),
        ("Usted", "atendía el teléfono", "ha apuntado", "nada."),
        ("Tú", "limpiabas el salón", "has roto", "nada."),
        ("Ellos", "cargaban el camión", "han olvidado", "nada."),
        ("Ella", "repasaba las cuentas", "ha detectado", "nada."),
        ("Vosotras", "preparabais la cena", "habéis quemado", "nada."),
        ("Tú", "barrías la acera", "has pisado", "nada."),
        ("Él", "clasificaba los sellos", "ha perdido", "nada."),
        ("Nosotros", "cerrábamos el quiosco", "hemos vendido", "nada."),
        ("Tú", "cosías junto a la lámpara", "has manchado", "nada."),
        ("Ellas", "regaban las macetas", "han estropeado", "nada."),
    )
    entries = tuple(
        {
            "subject": subject,
            "adjunct": {
                "neg_matrix_neg_embed": f"como no {clause},",
                "pos_matrix_neg_embed": f"como no {clause},",
                "neg_matrix_pos_embed": f"como {clause},",
                "pos_matrix_pos_embed": f"como {clause},",
            },
            "vp": {
                "neg_matrix_neg_embed": f"no {vp}",
                "neg_matrix_pos_embed": f"no {vp}",
                "pos_matrix_neg_embed": vp,
                "pos_matrix_pos_embed": vp,
            },
            "npi": npi,
        }
        for subject, clause, vp, npi in rows
    )
    return SuiteTemplate(
        slug="negative_polarity_items",
        name="Negative Polarity Items",
        circuit=Circuit.LICENSING,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("subject", "adjunct_clause", "verb_phrase", "polarity_item"),
        condition_names=(
            "neg_matrix_neg_embed", "neg_matrix_pos_embed",
            "pos_matrix_neg_embed", "pos_matrix_pos_embed",
        ),
        predictions=(
            "(4;pos_matrix_neg_embed) > (4;neg_matrix_neg_embed)",
            "(4;pos_matrix_pos_embed) > (4;neg_matrix_pos_embed)",
        ),
        frame=("{subject},", "{adjunct}", "{vp}", "{npi}"),
        slots=(("row", entries),),
        anchors=(
            ("neg_matrix_neg_embed", "Tú, como no mirabas por la ventana, no has visto a nadie."),
            ("neg_matrix_pos_embed", "Tú, como mirabas por la ventana, no has visto a nadie."),
        ),
    )


def _npi_polarity_agreement() -> SuiteTemplate:
    rows = (
        ("Yo", "bebo"), ("Él", "fuma"), ("Ella", "conduce"), ("Yo", "miento"),
        ("Tú", "desayunas"), ("Él", "cocina"), ("Nosotros", "discutimos"),
        ("Yo", "canto"), ("Ella", "vuela"), ("Tú", "trasnochas"),
        ("Él", "apuesta"), ("Yo", "grito"), ("Ella", "corre"),
        ("Nosotros", "madrugamos"), ("Tú", "mientes"), ("Él", "baila"),
        ("Yo", "viajo"), ("Ella", "protesta"), ("Vosotros", "perdéis"),
        ("Ellos", "pasean"),
    )
    entries = tuple(
        {
            "subject": subject,
            "vp": {
                "neg_npi": f"no {verb}", "neg_ppi": f"no {verb}",
                "pos_npi": verb, "pos_ppi": verb,
            },
            "polarity": {
                "neg_npi": "nunca.", "pos_npi": "nunca.",
                "neg_ppi": "siempre.", "pos_ppi": "siempre.",
            },
        }
        for subject, verb in rows
    )
    return SuiteTemplate(
        slug="npi_polarity_agreement",
        name="NPIs and Polarity Agreement",
        circuit=Circuit.LICENSING,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("subject", "verb_phrase", "polarity_item"),
        condition_names=("neg_npi", "neg_ppi", "pos_npi", "pos_ppi"),
        predictions=(
            "(3;neg_npi) < (3;neg_ppi)",
            "(3;neg_npi) < (3;pos_npi)",
            "(3;pos_ppi) < (3;neg_ppi)",
            "(3;pos_ppi) < (3;pos_npi)",
        ),
        frame=("{subject}", "{vp}", "{polarity}"),
        slots=(("row", entries),),
        anchors=(
            ("neg_npi", "Yo no bebo nunca."),
            ("neg_ppi", "Yo no bebo siempre."),
            ("pos_npi", "Yo bebo nunca."),
            ("pos_ppi", "Yo bebo siempre."),
        ),
    )


_WEATHER_PAIRS = (
    ("mañana", "llueva.", "lloverá."),
    ("esta noche", "nieve.", "nevará."),
    ("pronto", "truene.", "tronará."),
    ("el domingo", "granice.", "granizará."),
)


def _subjunctive_feeling() -> SuiteTemplate:
    matrix_pairs = (
        ("Espero", "Sé"), ("Temo", "Afirmo"), ("Deseo", "Veo"),
        ("Me alegra", "Digo"), ("Me sorprende", "Oigo"),
    )
    matrix_entries = tuple(
        {
            "matrix": {
                "feel_subj": feel, "feel_ind": feel,
                "nonfeel_subj": nonfeel, "nonfeel_ind": nonfeel,
            }
        }
        for feel, nonfeel in matrix_pairs
    )
    weather_entries = tuple(
        {
            "adv": adv,
            "verb": {
                "feel_subj": subj, "nonfeel_subj": subj,
                "feel_ind": ind, "nonfeel_ind": ind,
            },
        }
        for adv, subj, ind in _WEATHER_PAIRS
    )
    return SuiteTemplate(
        slug="subjunctive_feeling_verbs",
        name="Subjunctive Mood and Verbs that Express Feeling",
        circuit=Circuit.LICENSING,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("matrix_verb", "complementizer", "subordinate_verb"),
        condition_names=("feel_subj", "feel_ind", "nonfeel_subj", "nonfeel_ind"),
        predictions=(
            "(3;feel_subj) < (3;feel_ind)",
            "(3;nonfeel_subj) > (3;nonfeel_ind)",
            "(3;feel_subj) < (3;nonfeel_subj)",
        ),
        frame=("{matrix}", "que {adv}", "{verb}"),
        slots=(("matrix", matrix_entries), ("weather", weather_entries)),
        anchors=(
            ("feel_subj", "Espero que mañana llueva."),
            ("feel_ind", "Espero que mañana lloverá."),
            ("nonfeel_subj", "Sé que mañana llueva."),
            ("nonfeel_ind", "Sé que mañana lloverá."),
        ),
    )


def _subjunctive_negation_belief() -> SuiteTemplate:
    beliefs = ("creo", "pienso", "considero", "supongo", "imagino")
    belief_entries = tuple(
        {
            "matrix": {
                "matrix_neg_subj": f"No {belief}", "matrix_neg_ind": f"No {belief}",
                "embed_neg_subj": belief.capitalize(), "embed_neg_ind": belief.capitalize(),
            }
        }
        for belief in beliefs
    )
    weather_entries = tuple(
        {
            "comp": {
                "matrix_neg_subj": f"que {adv}", "matrix_neg_ind": f"que {adv}",
                "embed_neg_subj": f"que {adv} no", "embed_neg_ind": f"que {adv} no",
            },
            "verb": {
                "matrix_neg_subj": subj, "embed_neg_subj": subj,
                "matrix_neg_ind": ind, "embed_neg_ind": ind,
            },
        }
        for adv, subj, ind in _WEATHER_PAIRS
    )
    return SuiteTemplate(
        slug="subjunctive_negation_belief",
        name="Subjunctive Mood, Negation and Belief Verbs",
        circuit=Circuit.LICENSING,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("matrix_clause", "complementizer", "subordinate_verb"),
        condition_names=("matrix_neg_subj", "matrix_neg_ind", "embed_neg_subj", "embed_neg_ind"),
        predictions=(
            "(3;matrix_neg_subj) < (3;matrix_neg_ind)",
            "(3;embed_neg_subj) > (3;embed_neg_ind)",
            "(3;matrix_neg_subj) < (3;embed_neg_subj)",
        ),
        frame=("{matrix}", "{comp}", "{verb}"),
        slots=(("belief", belief_entries), ("weather", weather_entries)),
        anchors=(
            ("matrix_neg_subj", "No creo que mañana llueva."),
            ("matrix_neg_ind", "No creo que mañana lloverá."),
            ("embed_neg_subj", "Creo que mañana no llueva."),
            ("embed_neg_ind", "Creo que mañana no lloverá."),
        ),
    )


# =============================== Linearization ===================================

def _linearization_subject_aux() -> SuiteTemplate:
    names = ("Juan", "María", "Pedro", "Ana", "Luis",
             "Carmen", "Pablo", "Elena", "Sergio", "Lucía")
    participles = ("comido", "cantado", "dormido", "llegado", "salido",
                   "bailado", "trabajado", "estudiado", "mentido", "viajado")
    entries = []
    for name, part in zip(names, participles):
        for aux in ("ha", "había"):
            entries.append({
                "sentence": {
                    "sv_canonical": f"{name} {aux} {part}.",
                    "vs_postposed": f"{aux.capitalize()} {part} {name}.",
                    "aux_inverted": f"{name} {part} {aux}.",
                    "aux_split": f"{aux.capitalize()} {name} {part}.",
                }
            })
    return SuiteTemplate(
        slug="linearization_subject_aux_verb",
        name="Subject-Auxiliary Verb-Main Verb Linearization",
        circuit=Circuit.LINEARIZATION,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("sentence",),
        condition_names=("sv_canonical", "vs_postposed", "aux_inverted", "aux_split"),
        predictions=(
            "(1;vs_postposed) < (1;aux_inverted)",
            "(1;vs_postposed) < (1;aux_split)",
            "(1;sv_canonical) < (1;vs_postposed)",
            "((1;vs_postposed) - (1;sv_canonical)) < ((1;aux_inverted) - (1;vs_postposed))",
            "((1;vs_postposed) - (1;sv_canonical)) < ((1;aux_split) - (1;vs_postposed))",
        ),
        frame=("{sentence}",),
        slots=(("sentence", tuple(entries)),),
        anchors=(
            ("sv_canonical", "Juan ha comido."),
            ("vs_postposed", "Ha comido Juan."),
            ("aux_inverted", "Juan comido ha."),
            ("aux_split", "Ha Juan comido."),
        ),
    )


def _linearization_svo() -> SuiteTemplate:
    rows = (
        ("Ana", "compró", "un libro"), ("Pedro", "vendió", "un coche"),
        ("María", "escribió", "una carta"), ("Juan", "pintó", "un cuadro"),
        ("Lucía", "leyó", "una novela"), ("Carlos", "rompió", "un plato"),
        ("Elena", "encontró", "unas llaves"), ("Miguel", "cocinó", "una paella"),
        ("Sara", "dibujó", "un mapa"), ("Pablo", "perdió", "un paraguas"),
        ("Marta", "alquiló", "un piso"), ("Diego", "reparó", "una radio"),
        ("Clara", "bordó", "un pañuelo"), ("Andrés", "talló", "una flauta"),
        ("Irene", "horneó", "un bizcocho"), ("Hugo", "afinó", "un violín"),
        ("Nuria", "plantó", "un manzano"), ("Óscar", "tradujo", "un poema"),
        ("Silvia", "fotografió", "un faro"), ("Víctor", "reservó", "una mesa"),
    )
    entries = tuple(
        {
            "sentence": {
                "aff_svo": f"{name} {verb} {obj}.",
                "aff_vos": f"{verb.capitalize()} {obj} {name}.",
                "int_inverted": f"¿Qué {verb} {name}?",
                "int_straight": f"¿Qué {name} {verb}?",
            }
        }
        for name, verb, obj in rows
    )
    return SuiteTemplate(
        slug="linearization_svo",
        name="Subject-Verb-Object Linearization",
        circuit=Circuit.LINEARIZATION,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("sentence",),
        condition_names=("aff_svo", "aff_vos", "int_inverted", "int_straight"),
        predictions=(
            "(1;aff_vos) < (1;int_straight)",
            "(1;aff_svo) < (1;aff_vos)",
            "((1;aff_vos) - (1;aff_svo)) < ((1;int_straight) - (1;aff_vos))",
        ),
        frame=("{sentence}",),
        slots=(("sentence", entries),),
        anchors=(
            ("aff_svo", "Ana compró un libro."),
            ("aff_vos", "Compró un libro Ana."),
            ("int_inverted", "¿Qué compró Ana?"),
            ("int_straight", "¿Qué Ana compró?"),
        ),
    )


def _linearization_noun_modifier() -> SuiteTemplate:
    rows = (
        ("Construyó una", "mesa", "robusta", "de madera"),
        ("Compró una", "camisa", "blanca", "de seda"),
        ("Vendió un", "reloj", "antiguo", "de oro"),
        ("Diseñó un", "vestido", "elegante", "de encaje"),
        ("Heredó una", "lámpara", "dorada", "de bronce"),
        ("Restauró un", "armario", "macizo", "de roble"),
        ("Talló una", "figura", "delicada", "de marfil"),
        ("Encargó una", "pulsera", "fina", "de plata"),
        ("Fabricó un", "banco", "resistente", "de hierro"),
        ("Regaló una", "bufanda", "suave", "de lana"),
        ("Montó una", "estantería", "amplia", "de pino"),
        ("Forjó una", "verja", "sólida", "de acero"),
        ("Cosió un", "mantel", "alegre", "de lino"),
        ("Sopló un", "jarrón", "frágil", "de vidrio"),
        ("Tejió un", "jersey", "grueso", "de alpaca"),
        ("Pulió una", "encimera", "brillante", "de mármol"),
        ("Modeló una", "vasija", "tosca", "de barro"),
        ("Imprimió un", "cartel", "llamativo", "de papel"),
        ("Trenzó una", "cesta", "ligera", "de mimbre"),
        ("Esculpió un", "busto", "severo", "de granito"),
    )
    entries = tuple(
        {
            "intro": intro,
            "np": {
                "adj_post": f"{noun} {adj}.",
                "adj_pre": f"{adj} {noun}.",
                "pp_post": f"{noun} {pp}.",
                "pp_pre": f"{pp} {noun}.",
            },
        }
        for intro, noun, adj, pp in rows
    )
    return SuiteTemplate(
        slug="linearization_noun_modifier",
        name="Noun-Adjective and Noun-PP Linearization",
        circuit=Circuit.LINEARIZATION,
        language="es",
        has_modifier=False,
        modifier_pair_id=None,
        region_names=("introduction", "noun_phrase"),
        condition_names=("adj_post", "adj_pre", "pp_post", "pp_pre"),
        predictions=(
            "(2;pp_pre) > (2;pp_post)",
            "(2;adj_pre) > (2;adj_post)",
            "((2;adj_pre) - (2;adj_post)) < ((2;pp_pre) - (2;pp_post))",
        ),
        frame=("{intro}", "{np}"),
        slots=(("row", entries),),
        anchors=(
            ("adj_post", "Construyó una mesa robusta."),
            ("adj_pre", "Construyó una robusta mesa."),
            ("pp_post", "Construyó una mesa de madera."),
            ("pp_pre", "Construyó una de madera mesa."),
        ),
    )


# =============================== registry & data dir =============================

def all_templates() -> tuple[SuiteTemplate, ...]:
    return (
        _basic_subject_verb(),
        _sv_subject_rc(),
        _sv_object_rc(),
        _determiner_noun(),
        _adjective_noun(),
        _attribute(),
        _attribute_rc(
            "attribute_agreement_object_rc",
            "Attribute Agreement with Object Relative Clause",
            _ATTRIBUTE_OBJECT_RCS,
        ),
        _attribute_rc(
            "attribute_agreement_subject_rc",
            "Attribute Agreement with Subject Relative Clause",
            _ATTRIBUTE_SUBJECT_RCS,
        ),
        _predicative(),
        _center_embedding(),
        _center_embedding_pp(),
        _subordination(),
        _subordination_rc(
            "subordination_object_rc",
            "Subordination with Object Relative Clause",
            use_subject_rc=False,
        ),
        _subordination_rc(
            "subordination_subject_rc",
            "Subordination with Subject Relative Clause",
            use_subject_rc=True,
        ),
        _filler_gap_basic(),
        _filler_gap_embeddings(),
        _pseudo_cleft(),
        _npz_overt_object(),
        _npz_intransitive(),
        _negative_polarity_items(),
        _npi_polarity_agreement(),
        _subjunctive_feeling(),
        _subjunctive_negation_belief(),
        _linearization_subject_aux(),
        _linearization_svo(),
        _linearization_noun_modifier(),
    )


def build_all_suites() -> list[tuple[SuiteTemplate, TestSuite]]:
    return [(template, expand_template(template)) for template in all_templates()]


def generate_data(dest: Path) -> list[Path]:
    """Write one document per suite plus the exemplar-sentence spot-check list."""
    written = []
    anchors = []
    for template, suite in build_all_suites():
        circuit_dir = dest / DATA_VERSION / template.language / CIRCUIT_DIRS[template.circuit]
        circuit_dir.mkdir(parents=True, exist_ok=True)
        path = circuit_dir / f"{template.slug}.json"
        path.write_bytes(serialize_suite(suite))
        written.append(path)
        for condition, text in template.anchors:
            anchors.append({
                "suite": template.slug,
                "name": template.name,
                "item": 1,
                "condition": condition,
                "text": text,
            })
    anchors_path = dest / DATA_VERSION / "es" / "anchors.json"
    anchors_path.write_text(
        json.dumps(anchors, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    written.append(anchors_path)
    return written


def data_root():
    return resources.files("syngauntlet") / "data" / DATA_VERSION


def shipped_suite_files(language: str | None = "es") -> list:
    """Traversables of the shipped suite documents, in catalog order."""
    root = data_root()
    files = []
    for lang_dir in sorted(root.iterdir(), key=lambda t: t.name):
        if not lang_dir.is_dir():
            continue
        if language is not None and lang_dir.name != language:
            continue
        for circuit_dir in sorted(lang_dir.iterdir(), key=lambda t: t.name):
            if not circuit_dir.is_dir():
                continue
            for doc in sorted(circuit_dir.iterdir(), key=lambda t: t.name):
                if doc.name.endswith(".json"):
                    files.append(doc)
    return files


def load_shipped_suites(language: str | None = "es") -> list[TestSuite]:
    return [load_suite(doc.read_bytes()) for doc in shipped_suite_files(language)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    circuit: Circuit
    language: str
    has_modifier: bool
    item_count: int


def list_shipped_suites(language: str | None = "es") -> list[CatalogEntry]:
    return [
        CatalogEntry(
            name=suite.name,
            circuit=suite.circuit,
            language=suite.language,
            has_modifier=suite.has_modifier,
            item_count=len(suite.items),
        )
        for suite in load_shipped_suites(language)
    ]


def load_anchor_list() -> list[dict]:
    path = data_root() / "es" / "anchors.json"
    return json.loads(path.read_text(encoding="utf-8"))


def _main() -> None:
    dest = Path(__file__).resolve().parent / "data"
    for path in generate_data(dest):
        print(path)


if __name__ == "__main__":
    _main()
