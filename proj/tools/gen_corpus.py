#!/usr/bin/env python3
"""Generates the bloated fixture corpus under tests/fixtures/corpus.

Every page is built once as a tree and written twice: as original.html and as
a schema-1 layout snapshot. Visible content carries explicit absolute geometry
in its inline style, so the snapshot rects are exactly what a browser lays out;
wrappers get the bounding box of their content.

Bloat comes from the usual places: an inlined utility CSS framework, unused
inline script bundles, external framework/tracker references, utility-class
noise, deep wrapper chains, hidden duplicate menus and inline SVG sprites.

Deterministic: same output on every run.
    python3 tools/gen_corpus.py [out_dir]
"""
import html
import json
import random
import sys
from pathlib import Path

VIEWPORT_W, VIEWPORT_H = 1280, 800

WORDS = ("fast light simple modern secure cloud team plan build ship learn grow "
         "daily fresh local global smart open trusted premium free instant easy "
         "design data market travel food music sport health home garden style "
         "city river ocean mountain coffee bread market ticket event guide").split()

THEMES = [
    ("news", "#1a1a2e"), ("shop", "#ff6f00"), ("blog", "#2e7d32"), ("landing", "#3949ab"),
    ("docs", "#37474f"), ("recipes", "#c62828"), ("portfolio", "#6a1b9a"), ("forum", "#00838f"),
    ("travel", "#0277bd"), ("restaurant", "#4e342e"), ("pricing", "#283593"), ("events", "#ad1457"),
]

FONT = "Helvetica, Arial, sans-serif"


class N:
    def __init__(self, tag, attrs=None, style="", computed=None, text="", children=None, rect=None):
        self.tag = tag
        self.attrs = dict(attrs or {})
        self.style = style
        self.computed = dict(computed or {})
        self.text = text
        self.children = list(children or [])
        self.rect = rect


def rgb(hex_color):
    h = hex_color.lstrip("#")
    return "rgb(%d, %d, %d)" % (int(h[0:2], 16), int(h[2:4], 16), int(h[4:6], 16))


def sentence(rng, lo, hi):
    words = [rng.choice(WORDS) for _ in range(rng.randint(lo, hi))]
    return " ".join(words).capitalize()


def utility_classes(rng, n):
    pre = ["", "sm:", "md:", "lg:"]
    stems = ["m", "p", "mt", "mb", "px", "py", "text", "bg", "flex", "grid", "gap", "rounded", "shadow", "w", "h"]
    return " ".join(rng.choice(pre) + rng.choice(stems) + "-" + str(rng.randint(0, 12)) for _ in range(n))


def placed(tag, rng, x, y, w, h, text="", attrs=None, computed=None, extra_style=""):
    style = "position:absolute;left:%spx;top:%spx;width:%spx;height:%spx" % (x, y, w, h)
    if extra_style:
        style += ";" + extra_style
    a = {"class": utility_classes(rng, rng.randint(3, 9))}
    a.update(attrs or {})
    return N(tag, a, style, computed, text, rect=(x, y, w, h))


def text_node(tag, rng, x, y, w, h, text, size, weight="400", color="#222222", align="start", attrs=None):
    computed = {"fontFamily": FONT, "fontSize": "%dpx" % size, "fontWeight": weight, "color": rgb(color),
                "textAlign": align, "displayKind": "block"}
    css = "font-size:%dpx;font-weight:%s;color:%s" % (size, weight, color)
    return placed(tag, rng, x, y, w, h, text, attrs, computed, css)


def panel(rng, x, y, w, h, color, children, radius=0):
    computed = {"backgroundColor": rgb(color), "displayKind": "block"}
    css = "background-color:%s" % color
    if radius:
        computed["borderRadius"] = "%dpx" % radius
        css += ";border-radius:%dpx" % radius
    p = placed("div", rng, x, y, w, h, computed=computed, extra_style=css)
    p.children = children
    return p


def wrap(rng, node, depth):
    """Buries a node under `depth` layout-only wrappers."""
    for _ in range(depth):
        node = N(rng.choice(["div", "div", "section", "div", "span"]),
                 {"class": utility_classes(rng, rng.randint(2, 6)), "data-testid": "w%d" % rng.randint(0, 99999)},
                 computed={"displayKind": "block"}, children=[node])
    return node


def svg_sprite(rng, icons):
    paths = []
    for i in range(icons):
        d = "M%d %d" % (rng.randint(0, 24), rng.randint(0, 24))
        d += "".join(" l%d.%d %d.%d" % (rng.randint(-9, 9), rng.randint(0, 9), rng.randint(-9, 9), rng.randint(0, 9))
                     for _ in range(rng.randint(12, 30)))
        paths.append(N("symbol", {"id": "icon-%d" % i, "viewBox": "0 0 24 24"}, children=[N("path", {"d": d + "z"})]))
    return N("svg", {"xmlns": "http://www.w3.org/2000/svg", "style": "display:none"}, computed={"displayKind": "none"},
             children=paths)


def framework_css(rng, rules):
    colors = ["slate", "gray", "red", "orange", "amber", "green", "teal", "blue", "indigo", "purple", "pink"]
    props = ["margin", "padding", "margin-top", "padding-left", "gap", "width", "height", "font-size", "line-height"]
    out = ["/*! utility framework v3.4.1 | inlined build */",
           "*,::before,::after{box-sizing:border-box;border-width:0;border-style:solid;border-color:#e5e7eb}"]
    for i in range(rules):
        kind = rng.randint(0, 3)
        if kind == 0:
            c = rng.choice(colors)
            shade = rng.choice([50, 100, 200, 300, 400, 500, 600, 700, 800, 900])
            out.append(".text-%s-%d{--tw-text-opacity:1;color:rgb(%d %d %d / var(--tw-text-opacity))}" %
                       (c, shade, rng.randint(0, 255), rng.randint(0, 255), rng.randint(0, 255)))
        elif kind == 1:
            p = rng.choice(props)
            out.append(".%s-%d{%s:%.2frem}" % (p[:2], i, p, rng.randint(0, 96) / 4))
        elif kind == 2:
            bp = rng.choice([640, 768, 1024, 1280, 1536])
            out.append("@media (min-width:%dpx){.bp%d\\:grid-cols-%d{grid-template-columns:repeat(%d,minmax(0,1fr))}}" %
                       (bp, bp, i % 12 + 1, i % 12 + 1))
        else:
            out.append(".hover\\:shadow-%d:hover{--tw-shadow:0 %dpx %dpx -%dpx rgb(0 0 0 / 0.%d);"
                       "box-shadow:var(--tw-ring-offset-shadow,0 0 #0000),var(--tw-shadow)}" %
                       (i, rng.randint(1, 20), rng.randint(1, 40), rng.randint(1, 8), rng.randint(1, 9)))
    return "\n".join(out)


def unused_bundle(rng, functions):
    out = ["/*! vendor bundle */!function(e){var t={};"]
    for i in range(functions):
        a, b = rng.randint(0, 999), rng.randint(0, 0xffff)
        out.append("function _%x(n,r){var o=n&&n.length||0;for(var i=0;i<o;i++){r=(r*%d+n.charCodeAt(i))%%0x%x}"
                   "return r^%d}t[\"m%d\"]=_%x;" % (i, a, b + 1, b, i, i))
    out.append("e.__vendor=t}(window);")
    return "".join(out)


def build_page(index, theme, accent):
    rng = random.Random(1000 + index)
    W = VIEWPORT_W
    bloat = 0.5 + index / 6  # pages range from lightly to heavily bloated
    y = 0
    body_children = []

    # header: bar, logo, nav links, call to action
    header_kids = [text_node("a", rng, 40, 18, 160, 28, theme.capitalize() + "ly", 22, "700", "#ffffff",
                             attrs={"href": "/"})]
    for i in range(5):
        header_kids.append(text_node("a", rng, 320 + i * 110, 22, 90, 20, rng.choice(WORDS).capitalize(), 15,
                                     color="#eeeeee", attrs={"href": "/" + rng.choice(WORDS)}))
    header_kids.append(placed("button", rng, 1100, 14, 140, 36, "", {"id": "cta-top"},
                              {"displayKind": "inline-block"}))
    header_kids[-1].children = [N("span", computed={"displayKind": "inline"}, text="Get started", rect=(1110, 22, 120, 20))]
    body_children.append(wrap(rng, N("header", {"class": utility_classes(rng, 8)}, computed={"displayKind": "block"},
                                     children=[panel(rng, 0, 0, W, 64, accent, header_kids)]), int(2 * bloat)))
    y = 64

    # hidden mobile menu: a full duplicate of the navigation
    mobile = N("nav", {"class": "mobile-menu " + utility_classes(rng, 6), "aria-hidden": "true"},
               "display:none", {"displayKind": "none"},
               children=[N("a", {"href": "/m/" + w}, text=w, computed={"displayKind": "none"}) for w in WORDS[:20]])
    body_children.append(mobile)

    # hero
    hero = [text_node("h1", rng, 80, y + 60, 620, 56, sentence(rng, 3, 6), 44, "700", "#111111"),
            text_node("p", rng, 80, y + 130, 560, 72, sentence(rng, 14, 24), 18, color="#444444"),
            placed("img", rng, 760, y + 40, 440, 300, attrs={"src": "https://cdn.example.com/%s/hero-%d.webp" % (theme, index),
                                                           "alt": theme + " hero", "loading": "lazy"},
                   computed={"objectFit": "cover", "displayKind": "block"}, extra_style="object-fit:cover"),
            placed("button", rng, 80, y + 230, 180, 48, "Try it free", {"id": "hero-cta"}, {"displayKind": "inline-block"})]
    body_children.append(wrap(rng, panel(rng, 0, y, W, 380, "#f5f5f5", hero), int(4 * bloat)))
    y += 380

    # cards
    cards = rng.randint(3, 6)
    card_w = (W - 80 - (cards - 1) * 24) // cards
    row = []
    for c in range(cards):
        x = 40 + c * (card_w + 24)
        kids = [placed("img", rng, x + 16, y + 56, card_w - 32, 120,
                       attrs={"src": "https://cdn.example.com/%s/card-%d.jpg" % (theme, c), "alt": ""},
                       computed={"objectFit": "fill", "displayKind": "block"}),
                text_node("h3", rng, x + 16, y + 190, card_w - 32, 28, sentence(rng, 2, 4), 20, "600"),
                text_node("p", rng, x + 16, y + 226, card_w - 32, 60, sentence(rng, 10, 18), 14, color="#555555")]
        row.append(wrap(rng, panel(rng, x, y + 40, card_w, 270, "#ffffff", kids, radius=8), int(3 * bloat)))
    body_children.append(wrap(rng, N("section", {"class": utility_classes(rng, 10)}, computed={"displayKind": "block"},
                                     children=row), int(2 * bloat)))
    y += 340

    # signup form
    form_kids = [text_node("h2", rng, 80, y + 30, 500, 36, "Stay in the loop", 28, "700"),
                 text_node("label", rng, 80, y + 84, 200, 18, "Email address", 14),
                 placed("input", rng, 80, y + 106, 320, 40, attrs={"type": "email", "id": "email",
                                                                   "placeholder": "you@example.com"},
                        computed={"displayKind": "inline-block"}),
                 placed("select", rng, 420, y + 106, 180, 40, attrs={"id": "topic"}, computed={"displayKind": "inline-block"}),
                 placed("button", rng, 620, y + 106, 140, 40, "Subscribe", {"id": "subscribe", "type": "submit"},
                        {"displayKind": "inline-block"})]
    form_kids[3].children = [N("option", text=t, computed={"displayKind": "block"})
                             for t in ("Weekly digest", "Product news", "Everything")]
    form = N("form", {"action": "https://forms.example.com/subscribe", "method": "post", "class": utility_classes(rng, 5)},
             computed={"displayKind": "block"}, children=form_kids)
    body_children.append(wrap(rng, form, int(3 * bloat)))
    if index % 3 == 0:
        body_children.append(placed("video", rng, 800, y + 20, 400, 225,
                                    attrs={"src": "https://media.example.com/%s/intro.mp4" % theme, "controls": ""},
                                    computed={"displayKind": "block"}))
    y += 280

    # footer
    foot = [text_node("p", rng, 40, y + 24, 600, 20, "© 2024 %s Inc. All rights reserved." % theme.capitalize(), 13,
                      color="#bbbbbb")]
    for i in range(6):
        foot.append(text_node("a", rng, 40 + i * 140, y + 60, 120, 18, sentence(rng, 1, 2), 13, color="#dddddd",
                              attrs={"href": "/legal/%d" % i}))
    body_children.append(wrap(rng, N("footer", {"class": utility_classes(rng, 6)}, computed={"displayKind": "block"},
                                     children=[panel(rng, 0, y, W, 110, "#212121", foot)]), int(2 * bloat)))
    y += 110

    # cookie banner, rendered invisible until consent logic runs
    cookie = placed("div", rng, 0, VIEWPORT_H - 60, W, 60, "We use cookies to improve your experience.",
                    {"id": "cookie-banner"}, {"visibility": "hidden", "backgroundColor": rgb("#000000"),
                                              "displayKind": "block"}, "visibility:hidden;background-color:#000")
    body_children.append(cookie)
    body_children.append(svg_sprite(rng, int(8 * bloat)))

    # trailing scripts: external trackers plus unused inline bundles
    for src in ("https://www.googletagmanager.com/gtag/js?id=G-%d" % index, "https://cdn.example.net/ads.js",
                "https://cdn.jsdelivr.net/npm/jquery@3.7.1/dist/jquery.min.js"):
        body_children.append(N("script", {"src": src, "async": ""}, computed={"displayKind": "none"}))
    body_children.append(N("script", computed={"displayKind": "none"}, text=unused_bundle(rng, int(90 * bloat))))
    body_children.append(N("noscript", computed={"displayKind": "none"},
                           children=[N("iframe", {"src": "https://www.googletagmanager.com/ns.html?id=GTM-%d" % index,
                                                  "height": "0", "width": "0", "style": "display:none"},
                                       computed={"displayKind": "none"})]))

    head = N("head", children=[
        N("meta", {"charset": "utf-8"}),
        N("meta", {"name": "viewport", "content": "width=device-width, initial-scale=1"}),
        N("title", text="%s | %s" % (theme.capitalize(), sentence(rng, 3, 6))),
        N("link", {"rel": "stylesheet", "href": "https://cdn.jsdelivr.net/npm/bootstrap@5.3.2/dist/css/bootstrap.min.css"}),
        N("link", {"rel": "stylesheet", "href": "https://fonts.googleapis.com/css2?family=Inter:wght@400;600;700"}),
        N("link", {"rel": "preload", "href": "https://cdn.example.com/fonts/inter.woff2", "as": "font"}),
        N("link", {"rel": "icon", "href": "/favicon.ico"}),
        N("style", text=framework_css(rng, int(260 * bloat))),
        N("script", text=unused_bundle(rng, int(40 * bloat))),
        N("script", {"type": "application/ld+json"},
          text=json.dumps({"@context": "https://schema.org", "@type": "Organization", "name": theme,
                           "sameAs": ["https://social.example.com/%s/%d" % (theme, i) for i in range(8)]})),
    ])
    body = N("body", {"class": utility_classes(rng, 12)}, "margin:0", {"displayKind": "block"}, children=body_children)
    root = N("html", {"lang": "en"}, computed={"displayKind": "block"}, children=[head, body])
    return root, max(y, VIEWPORT_H)


VOID = {"meta", "link", "img", "input", "br", "source"}
RAW = {"script", "style"}


def to_html(n, out):
    attrs = "".join(' %s="%s"' % (k, html.escape(v, quote=True)) if v != "" else " " + k for k, v in n.attrs.items())
    if n.style and "style" not in n.attrs:
        attrs += ' style="%s"' % n.style
    out.append("<%s%s>" % (n.tag, attrs))
    if n.tag in VOID:
        return
    if n.text:
        out.append(n.text if n.tag in RAW else html.escape(n.text, quote=False))
    for c in n.children:
        if n.tag in ("body", "head", "html") or (c.tag in ("div", "section", "header", "footer", "form", "nav")):
            out.append("\n")
        to_html(c, out)
    out.append("</%s>" % n.tag)


def bbox(n):
    """Fills in rects: wrappers enclose their children; invisible or empty ones get zero size."""
    boxes = [bbox(c) for c in n.children]
    if n.rect is not None:
        return n.rect
    boxes = [b for b in boxes if b[2] > 0 and b[3] > 0]
    if not boxes or n.computed.get("displayKind") == "none":
        n.rect = (0, 0, 0, 0)
    else:
        x0 = min(b[0] for b in boxes)
        y0 = min(b[1] for b in boxes)
        n.rect = (x0, y0, max(b[0] + b[2] for b in boxes) - x0, max(b[1] + b[3] for b in boxes) - y0)
    return n.rect


def to_snapshot(n, counter):
    x, y, w, h = n.rect
    j = {"tag": n.tag}
    attrs = {k: v for k, v in n.attrs.items() if k != "style"}
    if attrs:
        j["attrs"] = attrs
    j["rect"] = {"x": x, "y": y, "w": w, "h": h}
    if n.computed:
        j["style"] = n.computed
    if n.text and n.tag not in RAW:
        j["text"] = n.text
    j["paint_index"] = counter[0]
    counter[0] += 1
    if n.children:
        j["children"] = [to_snapshot(c, counter) for c in n.children]
    return j


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests/fixtures/corpus"
    for i, (theme, accent) in enumerate(THEMES):
        root, height = build_page(i, theme, accent)
        parts = ["<!DOCTYPE html>\n"]
        to_html(root, parts)
        parts.append("\n")
        bbox(root)
        root.rect = (0, 0, VIEWPORT_W, height)
        root.children[1].rect = (0, 0, VIEWPORT_W, height)
        snapshot = {"schema": 1, "viewport": {"width": VIEWPORT_W, "height": VIEWPORT_H},
                    "root": to_snapshot(root, [0])}
        page_dir = out_dir / ("%02d-%s" % (i + 1, theme))
        page_dir.mkdir(parents=True, exist_ok=True)
        (page_dir / "original.html").write_text("".join(parts), encoding="utf-8")
        (page_dir / "snapshot.json").write_text(json.dumps(snapshot, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
