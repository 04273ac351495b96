"""Reasoning cores: the pluggable extraction/taxonomy/relation engines.

Two implementations ship with the toolkit. ``RuleBasedCore`` is a fully
deterministic heuristic engine used for tests and offline runs.
``LlmCore`` drives an HTTP chat-completions endpoint through editable
prompt templates and parses JSON responses; it is configuration, not code.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import List, Optional, Protocol, Sequence, Tuple, runtime_checkable

from ..docprep.prepare import STOPWORDS, TokenChunk, normalize_text, tokenize


@dataclass(frozen=True)
class TermProposal:
    """A candidate glossary entry returned by a core.

    ``instance_of`` carries the label of the class a tagged instance was
    enumerated under, when the core could tell.
    """

    label: str
    is_instance: bool = False
    instance_of: Optional[str] = None
    definition: Optional[str] = None


@dataclass(frozen=True)
class RelationProposal:
    name: str
    domain: str
    range: str
    kind: str = "associative"  # associative | attribute | adhoc


class CoreError(RuntimeError):
    """A reasoning core failed to produce a usable answer."""


@runtime_checkable
class ReasoningCore(Protocol):
    """Contract every reasoning core must satisfy.

    Implementations must be total: return or raise :class:`CoreError`
    within their configured timeout, never hang. Returned terms, edges and
    relations may only reference supplied vocabulary or terms returned in
    the same call.
    """

    def extract_terms(
        self, chunk: TokenChunk, title: str, keywords: Sequence[str]
    ) -> List[TermProposal]: ...

    def confirm_terms(self, terms: Sequence[str], section) -> List[str]: ...

    def propose_taxonomy(self, terms: Sequence[str]) -> List[Tuple[str, str]]: ...

    def propose_relations(
        self, terms: Sequence[str], sentences: Sequence[str]
    ) -> List[RelationProposal]: ...

    def summarize_caption(self, caption: str) -> str: ...


_CAP_TOKEN_RE = re.compile(r"^[A-Z][A-Za-z0-9'-]*$")
_LIST_VERBS = {
    "include", "includes", "included", "are", "is", "contain", "contains",
    "comprise", "comprises", "as",
}


def _is_cap(token: str) -> bool:
    return bool(_CAP_TOKEN_RE.match(token))


def _phrase_spans(tokens: Sequence[str]) -> List[Tuple[int, int]]:
    """Maximal runs of capitalized tokens (start inclusive, end exclusive)."""
    spans = []
    i = 0
    n = len(tokens)
    while i < n:
        if _is_cap(tokens[i]):
            j = i
            while j < n and _is_cap(tokens[j]):
                j += 1
            spans.append((i, j))
            i = j
        else:
            i += 1
    return spans


def _trim_stopwords(words: List[str]) -> List[str]:
    while words and words[0].lower() in STOPWORDS:
        words = words[1:]
    while words and words[-1].lower() in STOPWORDS:
        words = words[:-1]
    return words


class RuleBasedCore:
    """Deterministic heuristic core.

    Terms are capitalized phrases that either repeat (frequency >= 2 within
    the chunk) or share a token with the document title/keywords. Items of
    comma enumerations ("A, B, and C") introduced by a listing verb are
    tagged as instances of the introducing phrase. The taxonomy heuristic
    groups terms sharing their head token; relations come from "X has Y" /
    "X of Y" sentence patterns; captions are summarized verbatim.
    """

    concurrent_safe = True

    def extract_terms(
        self, chunk: TokenChunk, title: str, keywords: Sequence[str]
    ) -> List[TermProposal]:
        tokens = chunk.tokens
        spans = _phrase_spans(tokens)
        anchor_tokens = {
            w for source in ([title] + list(keywords))
            for w in normalize_text(source).split()
            if w not in STOPWORDS
        }
        anchor_tokens |= {_singular(w) for w in anchor_tokens}

        enum_groups = self._enumerations(tokens, spans)
        enum_member_spans = {span for group in enum_groups for span in group["items"]}

        labels: dict = {}
        counts: dict = {}
        enum_only: dict = {}
        instance_of: dict = {}
        for span in spans:
            words = _trim_stopwords(list(tokens[span[0]:span[1]]))
            if not words:
                continue
            label = " ".join(words)
            key = label.lower()
            labels.setdefault(key, label)
            counts[key] = counts.get(key, 0) + 1
            in_enum = span in enum_member_spans
            enum_only[key] = enum_only.get(key, True) and in_enum
        for group in enum_groups:
            intro = group["intro"]
            if intro is None:
                continue
            intro_words = _trim_stopwords(list(tokens[intro[0]:intro[1]]))
            if not intro_words:
                continue
            intro_label = " ".join(intro_words)
            for span in group["items"]:
                words = _trim_stopwords(list(tokens[span[0]:span[1]]))
                if words:
                    instance_of.setdefault(" ".join(words).lower(), intro_label)

        proposals = []
        for key in sorted(labels):
            label = labels[key]
            token_set = {_singular(w.lower()) for w in label.split()}
            keyword_hit = bool(token_set & anchor_tokens)
            if counts[key] < 2 and not keyword_hit:
                continue
            proposals.append(
                TermProposal(
                    label=label,
                    is_instance=enum_only[key],
                    instance_of=instance_of.get(key) if enum_only[key] else None,
                )
            )
        return proposals

    def _enumerations(self, tokens, spans) -> List[dict]:
        """Comma lists of >= 3 capitalized phrases, with their intro phrase."""
        groups = []
        span_by_start = {s[0]: s for s in spans}
        used = set()
        for span in spans:
            if span in used:
                continue
            items = [span]
            cursor = span[1]
            while True:
                nxt = None
                if cursor < len(tokens) and tokens[cursor] == ",":
                    after = cursor + 1
                    if after < len(tokens) and tokens[after].lower() in ("and", "or"):
                        after += 1
                    nxt = span_by_start.get(after)
                elif cursor < len(tokens) and tokens[cursor].lower() in ("and", "or"):
                    nxt = span_by_start.get(cursor + 1)
                if nxt is None:
                    break
                items.append(nxt)
                cursor = nxt[1]
            if len(items) >= 3:
                used.update(items)
                intro = self._intro_phrase(tokens, spans, items[0][0])
                groups.append({"items": items, "intro": intro})
        return groups

    def _intro_phrase(self, tokens, spans, list_start: int):
        i = list_start - 1
        if i >= 0 and tokens[i] == ":":
            i -= 1
        if i >= 0 and tokens[i].lower() in _LIST_VERBS:
            i -= 1
            if i >= 0 and tokens[i].lower() == "such":
                i -= 1
            for span in spans:
                if span[1] == i + 1:
                    return span
        return None

    def confirm_terms(self, terms: Sequence[str], section) -> List[str]:
        body_tokens = set(normalize_text(section.body).split())
        for caption in getattr(section, "figure_captions", []):
            body_tokens.update(normalize_text(caption).split())
        confirmed = []
        for term in terms:
            words = normalize_text(term).split()
            if words and all(w in body_tokens for w in words):
                confirmed.append(term)
        return confirmed

    def propose_taxonomy(self, terms: Sequence[str]) -> List[Tuple[str, str]]:
        from .keys import split_words

        by_head: dict = {}
        label_keys = {
            " ".join(w.lower() for w in split_words(t)): t for t in terms
        }
        for term in terms:
            words = split_words(term)
            head = _singular(words[-1].lower())
            by_head.setdefault(head, []).append(term)
        edges = []
        for head in sorted(by_head):
            group = sorted(by_head[head])
            if len(group) < 2:
                continue
            parent = self._group_parent(group, label_keys)
            if parent is None:
                continue
            for term in group:
                if term != parent:
                    edges.append((term, parent))
        return edges

    def _group_parent(self, group: List[str], label_keys: dict) -> Optional[str]:
        # Prefer the member whose non-head prefix is itself a known term
        # ("Pizza Toppings" when "Pizza" is in the glossary); otherwise the
        # member with the strictly shortest label wins.
        from .keys import split_words

        anchored = []
        for term in group:
            words = split_words(term)
            prefix = " ".join(w.lower() for w in words[:-1])
            if prefix and prefix in label_keys:
                anchored.append(term)
        if anchored:
            return sorted(anchored)[0]
        lengths = sorted(len(t) for t in group)
        if len(lengths) > 1 and lengths[0] == lengths[1]:
            return None
        return min(group, key=len)

    def propose_relations(
        self, terms: Sequence[str], sentences: Sequence[str]
    ) -> List[RelationProposal]:
        by_lower = {t.lower(): t for t in terms}
        names = sorted(by_lower, key=len, reverse=True)
        if not names:
            return []
        term_pattern = "|".join(re.escape(n) for n in names)
        has_re = re.compile(
            rf"\b({term_pattern})\s+(?:has|have|uses|use)\s+(?:a|an|the)?\s*({term_pattern})\b",
            re.IGNORECASE,
        )
        of_re = re.compile(
            rf"\b({term_pattern})\s+of\s+(?:a|an|the)?\s*({term_pattern})\b",
            re.IGNORECASE,
        )
        proposals = []
        for sentence in sentences:
            for m in has_re.finditer(sentence):
                domain = by_lower[m.group(1).lower()]
                rng = by_lower[m.group(2).lower()]
                proposals.append(
                    RelationProposal(name=f"has {rng}", domain=domain, range=rng)
                )
            for m in of_re.finditer(sentence):
                attr = by_lower[m.group(1).lower()]
                owner = by_lower[m.group(2).lower()]
                proposals.append(
                    RelationProposal(name=f"has {attr}", domain=owner, range=attr)
                )
        return proposals

    def summarize_caption(self, caption: str) -> str:
        return caption


def _singular(word: str) -> str:
    if len(word) > 3 and word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


@dataclass
class LlmCoreConfig:
    endpoint: str
    model: str = "gpt-4"
    auth_env_var: str = "ONTOFREIGHT_LLM_TOKEN"
    timeout: float = 30.0
    retries: int = 2


def _load_prompt(name: str) -> str:
    return resources.files("ontofreight.ontogen").joinpath(
        f"prompts/{name}.txt"
    ).read_text(encoding="utf-8")


class LlmCore:
    """HTTP-backed core speaking a chat-completions style JSON protocol.

    Prompt templates live in ``prompts/`` with ``{name}`` placeholders and
    may be overridden per instance. Responses must be JSON lists; anything
    else raises :class:`CoreError` after the configured retries.
    """

    concurrent_safe = False

    def __init__(self, config: LlmCoreConfig, transport=None) -> None:
        import httpx

        self.config = config
        headers = {}
        token = os.environ.get(config.auth_env_var)
        if token:
            headers["Authorization"] = f"Bearer {token}"
        self._client = httpx.Client(
            timeout=config.timeout, headers=headers, transport=transport
        )
        self.templates = {
            name: _load_prompt(name)
            for name in (
                "extract_terms",
                "confirm_terms",
                "propose_taxonomy",
                "propose_relations",
                "summarize_caption",
            )
        }

    def _complete(self, prompt: str) -> str:
        last_error: Optional[Exception] = None
        for _ in range(self.config.retries + 1):
            try:
                response = self._client.post(
                    self.config.endpoint,
                    json={
                        "model": self.config.model,
                        "messages": [{"role": "user", "content": prompt}],
                        "temperature": 0,
                    },
                )
                response.raise_for_status()
                payload = response.json()
                return payload["choices"][0]["message"]["content"]
            except Exception as exc:  # noqa: BLE001 - retried, then wrapped
                last_error = exc
        raise CoreError(f"LLM request failed after retries: {last_error}")

    def _complete_json(self, prompt: str):
        text = self._complete(prompt)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise CoreError(f"LLM returned non-JSON content: {exc}") from exc

    def extract_terms(self, chunk, title, keywords):
        prompt = self.templates["extract_terms"].format(
            title=title,
            keywords=", ".join(keywords),
            chunk=" ".join(chunk.tokens),
        )
        items = self._complete_json(prompt)
        proposals = []
        for item in items:
            if isinstance(item, str):
                proposals.append(TermProposal(label=item))
            elif isinstance(item, dict) and "label" in item:
                proposals.append(
                    TermProposal(
                        label=item["label"],
                        is_instance=bool(item.get("is_instance", False)),
                        instance_of=item.get("instance_of"),
                        definition=item.get("definition"),
                    )
                )
        return proposals

    def confirm_terms(self, terms, section):
        prompt = self.templates["confirm_terms"].format(
            glossary=json.dumps(list(terms)),
            heading=section.heading,
            body=section.body,
        )
        accepted = self._complete_json(prompt)
        allowed = set(terms)
        return [t for t in accepted if t in allowed]

    def propose_taxonomy(self, terms):
        prompt = self.templates["propose_taxonomy"].format(
            glossary=json.dumps(list(terms))
        )
        edges = self._complete_json(prompt)
        out = []
        for edge in edges:
            if isinstance(edge, (list, tuple)) and len(edge) == 2:
                out.append((edge[0], edge[1]))
            elif isinstance(edge, dict) and "child" in edge and "parent" in edge:
                out.append((edge["child"], edge["parent"]))
        return out

    def propose_relations(self, terms, sentences):
        prompt = self.templates["propose_relations"].format(
            glossary=json.dumps(list(terms)),
            sentences=json.dumps(list(sentences)),
        )
        items = self._complete_json(prompt)
        out = []
        for item in items:
            if isinstance(item, dict) and {"name", "domain", "range"} <= set(item):
                out.append(
                    RelationProposal(
                        name=item["name"],
                        domain=item["domain"],
                        range=item["range"],
                        kind=item.get("kind", "associative"),
                    )
                )
        return out

    def summarize_caption(self, caption):
        return self._complete(
            self.templates["summarize_caption"].format(caption=caption)
        )
