// Runs transpiled pages against a minimal DOM and checks the runtime's
// behaviour: wiring, rescale, reach, timers, keydown and carousels.
// usage: node harness.js <maml binary> <fixtures dir>
"use strict";
const { execFileSync } = require("child_process");
const fs = require("fs");
const os = require("os");
const path = require("path");
const vm = require("vm");

const [maml] = process.argv.slice(2);
const tmp = fs.mkdtempSync(path.join(os.tmpdir(), "maml-rt-"));
let failures = 0;

// ---- mini DOM --------------------------------------------------------------

const VOID = new Set(["meta", "img", "input", "br", "link", "source"]);

class Style {
  constructor(text) {
    for (const decl of (text || "").split(";")) {
      const i = decl.indexOf(":");
      if (i < 0) continue;
      const key = decl.slice(0, i).trim().replace(/-([a-z])/g, (_, c) => c.toUpperCase());
      this[key] = decl.slice(i + 1).trim();
    }
    if (this.display === undefined) this.display = "";
  }
}

class Node {
  constructor(tag, attrs) {
    this.tagName = tag.toUpperCase();
    this.attrs = attrs;
    this.children = [];
    this.text = "";
    this.style = new Style(attrs.style);
    this.listeners = {};
    this.value = tag === "select" ? null : attrs.value || "";
    this.onclick = null;
  }
  get id() { return this.attrs.id; }
  getAttribute(n) { return n in this.attrs ? this.attrs[n] : null; }
  setAttribute(n, v) { this.attrs[n] = String(v); }
  addEventListener(type, fn) { (this.listeners[type] = this.listeners[type] || []).push(fn); }
  dispatch(type, ev) {
    if (type === "click" && this.onclick) this.onclick(ev);
    for (const fn of this.listeners[type] || []) fn(ev || {});
  }
  descendants() {
    const out = [];
    const walk = (n) => { for (const c of n.children) { out.push(c); walk(c); } };
    walk(this);
    return out;
  }
  getElementsByTagName(t) { return this.descendants().filter((n) => n.tagName === t.toUpperCase()); }
  get textContent() { return this.text + this.children.map((c) => c.textContent).join(""); }
  set textContent(v) { this.text = String(v); this.children = []; }
  getBoundingClientRect() { return { top: parseFloat(this.style.top) - win.scrollY }; }
}

function parse(html) {
  const doc = new Node("#document", {});
  const stack = [doc];
  const re = /<(\/?)([a-zA-Z!]+)([^>]*)>|([^<]+)/g;
  let m;
  while ((m = re.exec(html))) {
    const top = stack[stack.length - 1];
    if (m[4] !== undefined) { top.text += m[4].replace(/&#(\d+);/g, (_, n) => String.fromCharCode(+n)).replace(/&lt;/g, "<").replace(/&gt;/g, ">").replace(/&quot;/g, '"').replace(/&amp;/g, "&"); continue; }
    const tag = m[2].toLowerCase();
    if (tag === "!doctype") continue;
    if (m[1]) { stack.pop(); continue; }
    const attrs = {};
    const ar = /([a-zA-Z-]+)(?:="([^"]*)")?/g;
    let a;
    while ((a = ar.exec(m[3]))) attrs[a[1]] = a[2] === undefined ? "" : a[2].replace(/&quot;/g, '"').replace(/&amp;/g, "&");
    const node = new Node(tag, attrs);
    top.children.push(node);
    if (tag === "script") {
      const end = html.indexOf("</script>", re.lastIndex);
      node.text = html.slice(re.lastIndex, end);
      re.lastIndex = end + "</script>".length;
    } else if (!VOID.has(tag)) {
      stack.push(node);
    }
  }
  for (const sel of doc.getElementsByTagName("select")) {
    const opts = sel.getElementsByTagName("option");
    sel.value = opts.length ? opts[0].textContent : "";
  }
  return doc;
}

let win;

function load(html, width, height) {
  const doc = parse(html);
  const htmlEl = doc.children[0];
  const body = htmlEl.children.find((n) => n.tagName === "BODY");
  const all = doc.descendants();
  const document = {
    body,
    getElementById: (id) => all.find((n) => n.id === id) || null,
    querySelectorAll: (sel) => {
      const attr = sel.match(/^\[([a-z-]+)\]$/)[1];
      return all.filter((n) => attr in n.attrs);
    },
  };
  const timers = [];
  const warnings = [];
  win = {
    document,
    innerWidth: width,
    innerHeight: height,
    scrollY: 0,
    now: 0,
    listeners: {},
    console: { warn: (...a) => warnings.push(a.join(" ")) },
    setInterval: (fn, ms) => { timers.push({ fn, ms, next: ms }); },
    // the page calls these unqualified, so they must not depend on `this`
    addEventListener: (type, fn) => { (win.listeners[type] = win.listeners[type] || []).push(fn); },
    removeEventListener: (type, fn) => { win.listeners[type] = (win.listeners[type] || []).filter((f) => f !== fn); },
    fire(type) { for (const fn of [...(this.listeners[type] || [])]) fn({}); },
    advance(ms) {
      const end = this.now + ms;
      for (;;) {
        const due = timers.filter((t) => t.next <= end).sort((a, b) => a.next - b.next)[0];
        if (!due) break;
        this.now = due.next;
        due.next += due.ms;
        due.fn();
      }
      this.now = end;
    },
    resize(w) { this.innerWidth = w; this.fire("resize"); },
    scroll(y) { this.scrollY = y; this.fire("scroll"); },
    warnings,
  };
  win.window = win;
  const script = body.children.find((n) => n.tagName === "SCRIPT");
  vm.createContext(win);
  vm.runInContext(script.text, win);
  win.fire("load");
  return win;
}

function page(name, lines, width = 1200, height = 800) {
  const file = path.join(tmp, name + ".maml");
  fs.writeFileSync(file, lines.map((l) => JSON.stringify(l)).join("\n") + "\n");
  const html = execFileSync(maml, ["transpile", file, "-o", "-"], { encoding: "utf8" });
  return load(html, width, height);
}

function check(name, cond, detail) {
  if (cond) {
    console.log("ok   " + name);
  } else {
    failures++;
    console.log("FAIL " + name + (detail !== undefined ? ": " + JSON.stringify(detail) : ""));
  }
}

const geo = (x, y, w, h, extra) => Object.assign({ x, y, z: 0, w, h, display: true }, extra);

// ---- scenarios ---------------------------------------------------------------

{
  const w = page("click", [
    { viewport_width: 1200 },
    { type: "button", ...geo(10, 10, 80, 30), id: "button1", text: "Go" },
    { type: "img", ...geo(100, 10, 200, 100), id: "image1", src: "1.png" },
    { type: "img", ...geo(100, 10, 200, 100), display: false, id: "image2", src: "2.png" },
    { type: "text-field", ...geo(10, 200, 100, 20), id: "input3" },
    { type: "text", ...geo(10, 240, 100, 20), id: "text3", text: "before" },
    { type: "script", code: 'on("click", "button1") { show("image2"); hide("image1"); swap(val("input3"), "text3"); }' },
  ]);
  const $ = (id) => w.document.getElementById(id);
  check("click: initial state", $("image2").style.display === "none" && $("image1").style.display === "");
  $("input3").value = "typed";
  $("button1").dispatch("click");
  check("click: image2 shown", $("image2").style.display === "");
  check("click: image1 hidden", $("image1").style.display === "none");
  check("click: text3 holds input3's value", $("text3").textContent === "typed", $("text3").textContent);
  check("click: no warnings", w.warnings.length === 0, w.warnings);
}

{
  const w = page("scale", [
    { viewport_width: 200 },
    { type: "shape", ...geo(100, 5, 200, 20), id: "box", backgroundColor: "#000000" },
    { type: "text", ...geo(0, 50, 20, 20), display: false, id: "t", text: "hidden" },
  ], 200);
  const box = w.document.getElementById("box");
  check("scale: authored geometry at authored width", box.style.left === "100px" && box.style.width === "200px");
  w.resize(100);
  check("scale: half width halves x and w", box.style.left === "50px" && box.style.width === "100px", [box.style.left, box.style.width]);
  check("scale: y and h untouched", box.style.top === "5px" && box.style.height === "20px");
  w.resize(400);
  w.resize(100);
  check("scale: recomputed from authored values", box.style.left === "50px" && box.style.width === "100px");
  const t = w.document.getElementById("t");
  check("scale: hidden elements scale too", t.style.width === "10px" && t.style.display === "none");
}

{
  const w = page("reach", [
    { viewport_width: 1200 },
    { type: "text", ...geo(0, 1500, 100, 20), id: "footer", text: "end" },
    { type: "text", ...geo(0, 0, 100, 20), id: "counter", text: "0" },
    { type: "text-field", ...geo(0, 40, 100, 20), id: "box" },
    { type: "script", code: 'on("reach","footer"){swap(val("box"),"counter");}' },
  ], 1200, 800);
  const $ = (id) => w.document.getElementById(id);
  $("box").value = "1";
  w.scroll(500);
  check("reach: not yet visible", $("counter").textContent === "0");
  w.scroll(800);
  check("reach: fires when the element enters the viewport", $("counter").textContent === "1");
  $("box").value = "2";
  w.scroll(0);
  w.scroll(900);
  check("reach: fires only once", $("counter").textContent === "1");
}

{
  const w = page("timer", [
    { viewport_width: 1200 },
    { type: "text", ...geo(0, 0, 100, 20), display: false, id: "a", text: "a" },
    { type: "text", ...geo(0, 40, 100, 20), id: "b", text: "b" },
    { type: "script", code: 'on("timer",5){show("a");hide("b");}on("timer",0.5){swap("tick","b");}' },
  ]);
  const $ = (id) => w.document.getElementById(id);
  w.advance(499);
  check("timer: nothing before the first interval", $("b").textContent === "b" && $("a").style.display === "none");
  w.advance(1);
  check("timer: 0.5 s interval fired", $("b").textContent === "tick");
  w.advance(4499);
  check("timer: 5 s interval not yet", $("a").style.display === "none");
  w.advance(1);
  check("timer: 5 s interval fired", $("a").style.display === "" && $("b").style.display === "none");
}

{
  const w = page("keys", [
    { viewport_width: 1200 },
    { type: "text-field", ...geo(0, 0, 100, 20), id: "q" },
    { type: "dropdown", ...geo(0, 40, 100, 20), id: "plan", options: ["Free", "Pro"] },
    { type: "text", ...geo(0, 80, 100, 20), id: "out", text: "-" },
    { type: "button", ...geo(0, 120, 100, 20), id: "go", text: "Go" },
    { type: "script", code: 'on("keydown","q","Enter"){hide("go");}on("change","plan"){swap(val("plan"),"out");}' },
  ]);
  const $ = (id) => w.document.getElementById(id);
  $("q").dispatch("keydown", { key: "a" });
  check("keydown: other keys ignored", $("go").style.display === "");
  $("q").dispatch("keydown", { key: "Enter" });
  check("keydown: matching key fires", $("go").style.display === "none");
  $("plan").value = "Pro";
  $("plan").dispatch("change");
  check("change: dropdown value swapped in", $("out").textContent === "Pro");
}

{
  const w = page("carousel", [
    { viewport_width: 1200 },
    { type: "carousel", ...geo(0, 0, 300, 200), id: "c", srcs: ["1.png", "2.png", "3.png"] },
  ]);
  const c = w.document.getElementById("c");
  const imgs = c.getElementsByTagName("img");
  const [prev, next] = c.getElementsByTagName("button");
  const visible = () => imgs.map((m) => m.style.display !== "none");
  check("carousel: first slide visible", JSON.stringify(visible()) === "[true,false,false]");
  next.dispatch("click");
  check("carousel: next", JSON.stringify(visible()) === "[false,true,false]", visible());
  prev.dispatch("click");
  prev.dispatch("click");
  check("carousel: prev wraps", JSON.stringify(visible()) === "[false,false,true]", visible());
}

fs.rmSync(tmp, { recursive: true, force: true });
console.log(failures ? failures + " runtime check(s) failed" : "runtime ok");
process.exit(failures ? 1 : 0);
