"""Regenerates corpus.jsonl. Mentions are written as [X] placeholders and
converted to code-point offsets here."""
import json
import re
from pathlib import Path

REFS = {
    "a": (["Jane Smith"], 2015, [0.0, 0.0]),
    "b": (["Bob Lee"], 2016, [0.0, 1.0]),
    "c": (["Ann Wu"], 2017, [1.0, 0.0]),
    "d": (["Carlos Garcia"], 2018, [5.0, 5.0]),
    "e": (["Dana Chen"], 2019, [10.0, 0.0]),
    "f": (["Eun Kim"], 2020, [10.0, 1.0]),
    "g": (["Farah Patel"], 2021, [11.0, 0.0]),
    "h": (["Hana Novak", "Ivo Silva"], 2012, [0.0, 10.0]),
    "i": (["Ian Okafor"], 2013, [1.0, 10.0]),
    "j": (["Jon Muller", "Kai Rossi", "Lia Tanaka"], 2014, [0.0, 11.0]),
    "k": (["Mia Haddad"], 2010, [20.0, 20.0]),
    "l": (["Nils Berg"], 2011, [20.0, 21.0]),
    "m": ([], 2009, None),
}


def paragraph(text):
    mentions = []
    out = ""
    pos = 0
    for match in re.finditer(r"\[([a-z]+|zz-missing)\]", text):
        out += text[pos:match.start()]
        start = len(out)
        token = match.group(0)
        out += token
        mentions.append({"ref_paper_id": match.group(1), "start": start, "end": len(out)})
        pos = match.end()
    out += text[pos:]
    return {"text": out, "mentions": mentions}


def section(heading, paras, related=True):
    return {"heading": heading, "is_related_work": related,
            "paragraphs": [paragraph(p) for p in paras]}


def paper(pid, title, authors, year, sections, tldr=None, embedding=None, venue="CHI",
          citations=10):
    rec = {"paper_id": pid, "title": title, "abstract": f"Abstract of {title}.",
           "authors": authors, "year": year, "venue": venue, "citation_count": citations,
           "sections": sections}
    if tldr is not None:
        rec["tldr"] = tldr
    if embedding is not None:
        rec["embedding"] = embedding
    return rec


HEADING = "Online Misinformation Research Landscape"

records = [
    paper("s1", "Detecting Fake News at Scale", ["Quinn Adams", "Rae Brooks"], 2022, [
        section(HEADING, [
            "Fake news detection relies on linguistic cues [a], propagation patterns [b] "
            "and source credibility [c]. In this paper we build on these signals.",
        ]),
    ], tldr="Combines cues for fake news detection."),
    paper("s2", "Crowd Signals for Misinformation", ["Sam Cole"], 2021, [
        section(HEADING, [
            "Fake news detection relies on linguistic cues [a], propagation patterns [b] "
            "and crowd judgments [d]. Our system merges these signals into one model.",
        ]),
    ]),
    paper("s3", "How Fake News Spreads", ["Tia Diaz"], 2023, [
        section(HEADING, [
            "Fake news spread through social platforms was measured [e], simulated [f] "
            "and audited [g]. Platform interventions remain contested in everyday online practice today.",
        ]),
    ]),
    paper("s4", "Quality in Paid Crowdsourcing", ["Uma Evans", "Vic Ford", "Wes Gray"], 2020, [
        section("Crowdsourcing Quality Control Methods", [
            "Quality control for crowd workers uses gold questions [h], worker agreement [i], "
            "reputation [a] and redundancy [j]. Smith et al. showed the value of agreement. "
            "Later systems automated review.",
            "Payment schemes were compared by [h] and [i].",
        ]),
        section("Related Work", [
            "Crowd workers respond to task design [h], feedback [i] and payment levels [k]. "
            "Worker motivation shapes answer quality.",
        ]),
    ]),
    paper("s5", "Checking Claims Automatically", ["Xia Hill"], 2019, [
        section("Introduction", ["Automated claim verification is an open problem."], False),
        section("Background", [
            "Claim verification pipelines retrieve evidence [k], rank passages [l], "
            "label veracity [m] and explain verdicts [zz-missing]. Our approach extends "
            "evidence retrieval.",
        ], False),
        section("Method", ["We retrieve evidence and score it."], False),
        section("Results", ["The pipeline improves accuracy."], False),
        section("Conclusion", ["Claim checking benefits from evidence."], False),
    ], tldr="A claim verification pipeline."),
]

for rid, (authors, year, emb) in REFS.items():
    records.append(paper(rid, f"Reference paper {rid.upper()}", authors, year, [],
                         tldr=None if rid in "klm" else f"Summary of {rid}.",
                         embedding=emb, venue="ACL", citations=100 + ord(rid)))

out = Path(__file__).with_name("corpus.jsonl")
out.write_text("".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records))
