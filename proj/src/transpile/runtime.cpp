#include "maml/transpile/runtime.hpp"

#include "maml/format/json_text.hpp"

namespace maml::transpile {
namespace {

// W: authored viewport width, G: [[x,w],...] per body child, L: wiring table.
// Hidden elements carry an inline display:none; show() clears it.
constexpr std::string_view kRuntime =
    R"JS((function(W,G,L){var d=document,M=window.MAML={},K=[];)JS"
    R"JS(function $(i){var e=d.getElementById(i);if(!e)console.warn("maml: no element #"+i);return e})JS"
    R"JS(function show(i){var e=$(i);if(e)e.style.display=""})JS"
    R"JS(function hide(i){var e=$(i);if(e)e.style.display="none"})JS"
    R"JS(function valOf(i){var e=$(i);return e?e.value:void 0})JS"
    R"JS(function swap(v,i){var e=$(i);if(!e||v===void 0)return;)JS"
    R"JS(if(e.tagName=="INPUT"||e.tagName=="SELECT")e.value=v;else e.textContent=v})JS"
    R"JS(function step(c,n){var m=c.getElementsByTagName("img"),j=+c.getAttribute("data-i")||0;)JS"
    R"JS(m[j].style.display="none";j=(j+n+m.length)%m.length;m[j].style.display="";c.setAttribute("data-i",j)})JS"
    R"JS(M.show=show;M.hide=hide;M.swap=swap;M.valOf=valOf;M.step=step;)JS"
    R"JS(function run(o){for(var k=0;k<o.length;k++){var p=o[k];try{)JS"
    R"JS(if(p[0]=="swap")swap(typeof p[1]=="object"?valOf(p[1].val):p[1],p[2]);else M[p[0]](p[1])})JS"
    R"JS(catch(x){console.warn(x)}}})JS"
    R"JS(function rs(){var s=innerWidth/W;for(var i=0;i<K.length;i++){var t=K[i].style;)JS"
    R"JS(t.left=G[i][0]*s+"px";t.width=G[i][1]*s+"px"}})JS"
    R"JS(function bind(w){var o=w["do"],f=function(){run(o)};)JS"
    R"JS(if(w.on=="timer"){setInterval(f,w.every*1e3);return}var e=$(w.id);if(!e)return;)JS"
    R"JS(if(w.on=="keydown")e.addEventListener("keydown",function(v){if(v.key==w.key)f()});)JS"
    R"JS(else if(w.on=="reach"){var h=function(){if(e.getBoundingClientRect().top<innerHeight){)JS"
    R"JS(removeEventListener("scroll",h);f()}};addEventListener("scroll",h)})JS"
    R"JS(else e.addEventListener(w.on,f)})JS"
    R"JS(var c=d.body.children,i;for(i=0;i<G.length;i++)K.push(c[i]);)JS"
    R"JS(var q=d.querySelectorAll("[data-carousel]");for(i=0;i<q.length;i++)(function(c){)JS"
    R"JS(var b=c.getElementsByTagName("button");b[0].onclick=function(){step(c,-1)};)JS"
    R"JS(b[1].onclick=function(){step(c,1)}})(q[i]);)JS"
    R"JS(for(i=0;i<L.length;i++)bind(L[i]);rs();addEventListener("load",rs);addEventListener("resize",rs)}))JS";

static_assert(kRuntime.size() <= kRuntimeBudgetBytes, "page runtime exceeds its size budget");

}  // namespace

std::string_view runtime_library() { return kRuntime; }

std::string authored_table_json(const ScaleModel& scale) {
  std::string out = "[";
  for (std::size_t i = 0; i < scale.authored.size(); ++i) {
    if (i) out += ',';
    out += '[';
    json_text::append_number(out, scale.authored[i].x);
    out += ',';
    json_text::append_number(out, scale.authored[i].w);
    out += ']';
  }
  out += ']';
  return out;
}

std::string render_runtime(const ScaleModel& scale, const script::EventWiring& wiring) {
  std::string out(kRuntime);
  out += '(';
  json_text::append_number(out, scale.original_viewport_width);
  out += ',';
  out += authored_table_json(scale);
  out += ',';
  out += script::wiring_table_json(wiring);
  out += ");";
  return out;
}

}  // namespace maml::transpile
