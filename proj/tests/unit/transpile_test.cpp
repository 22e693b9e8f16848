#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "generators.hpp"
#include "maml/analyze/html_tree.hpp"
#include "maml/analyze/report.hpp"
#include "maml/script/parser.hpp"
#include "maml/script/wiring.hpp"
#include "maml/transpile/runtime.hpp"
#include "maml/transpile/scale.hpp"
#include "maml/transpile/transpiler.hpp"

using namespace maml;
using namespace maml::transpile;
using nlohmann::json;

namespace {

Element element(const json& j) { return make_element(j); }

json box(const std::string& type, json extra = json::object()) {
  json j = {{"type", type}, {"x", 10}, {"y", 20}, {"z", 3}, {"w", 40}, {"h", 50}};
  j.update(extra);
  return j;
}

Document doc_of(std::int64_t width, const std::vector<json>& elements) {
  Document d;
  d.viewport_width = width;
  for (const auto& j : elements) d.elements.push_back(make_element(j));
  return d;
}

const analyze::HtmlNode& body_of(const analyze::HtmlTree& tree) {
  REQUIRE(tree.roots.size() == 1);
  for (const auto& child : tree.roots[0].children)
    if (child.tag == "body") return child;
  FAIL("no body");
  return tree.roots[0];
}

std::map<std::string, int> id_counts(const analyze::HtmlTree& tree) {
  std::map<std::string, int> ids;
  tree.visit([&](const analyze::HtmlNode& n, std::size_t) {
    if (const auto* id = n.attr("id")) ++ids[*id];
  });
  return ids;
}

// Parses one rendered fragment and returns its single root.
analyze::HtmlNode fragment(const std::string& markup) {
  auto tree = analyze::parse_html(markup);
  REQUIRE(tree.roots.size() == 1);
  return tree.roots[0];
}

}  // namespace

TEST_SUITE("transpile") {
  TEST_CASE("the documented image renders with its six geometry/style values") {
    Element el = element(json::parse(maml::testing::kDocImageLine));
    CHECK(element_style(el) == "position:absolute;left:336px;top:15px;z-index:1;width:268px;height:31px;object-fit:fill");
    CHECK(render_element(el) ==
          "<img src=\"https://example.com/img/abc.webp\" alt=\"Alternate Text\" "
          "style=\"position:absolute;left:336px;top:15px;z-index:1;width:268px;height:31px;object-fit:fill\">");
  }

  TEST_CASE("empty document: a page holding only the runtime") {
    Document d = doc_of(800, {});
    HtmlPage page = transpile_document(d);
    std::string expected =
        "<!DOCTYPE html>\n"
        "<html><head><meta charset=\"utf-8\">"
        "<meta name=\"viewport\" content=\"width=device-width,initial-scale=1\"></head>\n"
        "<body style=\"margin:0\">\n"
        "<script>" +
        std::string(runtime_library()) + "(800,[],[]);</script>\n</body></html>\n";
    CHECK(page.text == expected);
    CHECK(page.asset_manifest.empty());
    CHECK(manifest_json(page) == "[]\n");

    auto tree = analyze::parse_html(page.text);
    const auto& body = body_of(tree);
    REQUIRE(body.children.size() == 1);
    CHECK(body.children[0].tag == "script");
  }

  TEST_CASE("N mixed elements give N+1 body children in document order") {
    maml::testing::Rng rng(21);
    for (int n : {1, 2, 7, 40}) {
      Document d = maml::testing::random_document(rng, n, true);
      HtmlPage page = transpile_document(d);
      auto tree = analyze::parse_html(page.text);
      const auto& body = body_of(tree);
      CAPTURE(n);
      REQUIRE(body.children.size() == static_cast<std::size_t>(n) + 1);
      CHECK(body.children.back().tag == "script");
      static const std::map<ElementKind, std::string> tag = {
          {ElementKind::Text, "div"},       {ElementKind::Shape, "div"},    {ElementKind::TextField, "input"},
          {ElementKind::Button, "button"},  {ElementKind::Dropdown, "select"}, {ElementKind::Image, "img"},
          {ElementKind::Carousel, "div"},   {ElementKind::Video, "video"}};
      for (int i = 0; i < n; ++i) {
        const Element& el = d.elements[static_cast<std::size_t>(i)];
        const auto& node = body.children[static_cast<std::size_t>(i)];
        CHECK(node.tag == tag.at(el.kind()));
        REQUIRE(node.attr("style"));
        CHECK(*node.attr("style") == element_style(el));
      }
    }
  }

  TEST_CASE("dropdown options keep their order") {
    auto node = fragment(render_element(element(box("dropdown", {{"options", {"a", "b"}}}))));
    CHECK(node.tag == "select");
    REQUIRE(node.children.size() == 2);
    CHECK(node.children[0].tag == "option");
    CHECK(node.children[0].text == "a");
    CHECK(node.children[1].text == "b");
  }

  TEST_CASE("carousel: three frames, first visible, two controls") {
    Element el = element(box("carousel", {{"id", "c"}, {"srcs", {"u1", "u2", "u3"}}}));
    CHECK(render_element(el) ==
          "<div id=\"c\" data-carousel style=\"position:absolute;left:10px;top:20px;z-index:3;width:40px;height:50px;overflow:hidden\">"
          "<img src=\"u1\" alt=\"\" style=\"position:absolute;left:0;top:0;width:100%;height:100%;object-fit:cover\">"
          "<img src=\"u2\" alt=\"\" style=\"position:absolute;left:0;top:0;width:100%;height:100%;object-fit:cover;display:none\">"
          "<img src=\"u3\" alt=\"\" style=\"position:absolute;left:0;top:0;width:100%;height:100%;object-fit:cover;display:none\">"
          "<button style=\"position:absolute;left:0;top:45%\">&#8249;</button>"
          "<button style=\"position:absolute;right:0;top:45%\">&#8250;</button></div>");
    auto node = fragment(render_element(el));
    REQUIRE(node.children.size() == 5);
    int visible = 0;
    for (int i = 0; i < 3; ++i) {
      CHECK(node.children[static_cast<std::size_t>(i)].tag == "img");
      if (node.children[static_cast<std::size_t>(i)].attr("style")->find("display:none") == std::string::npos) ++visible;
    }
    CHECK(visible == 1);
    CHECK(node.children[0].attr("style")->find("display:none") == std::string::npos);
    CHECK(node.children[3].tag == "button");
    CHECK(node.children[4].tag == "button");
  }

  TEST_CASE("button b1 shows Go") {
    CHECK(render_element(element(box("button", {{"id", "b1"}, {"text", "Go"}}))) ==
          "<button id=\"b1\" style=\"position:absolute;left:10px;top:20px;z-index:3;width:40px;height:50px;box-sizing:border-box\">Go</button>");
  }

  TEST_CASE("kind-specific markup") {
    CHECK(render_element(element(box("text", {{"text", "Hi"},
                                               {"fontSize", 18},
                                               {"color", "#ff0000"},
                                               {"textAlign", "center"},
                                               {"fontStyle", "italic"},
                                               {"fontWeight", 700},
                                               {"fontFamily", "Georgia"}}))) ==
          "<div style=\"position:absolute;left:10px;top:20px;z-index:3;width:40px;height:50px;font-family:Georgia;"
          "font-size:18px;color:#ff0000;text-align:center;font-style:italic;font-weight:700\">Hi</div>");
    CHECK(element_style(element(box("text", {{"text", "a\nb"}}))) ==
          "position:absolute;left:10px;top:20px;z-index:3;width:40px;height:50px;font-family:sans-serif;white-space:pre-wrap");
    CHECK(render_element(element(box("shape", {{"backgroundColor", "#00ff0080"}, {"borderRadius", 6}}))) ==
          "<div style=\"position:absolute;left:10px;top:20px;z-index:3;width:40px;height:50px;"
          "background-color:#00ff0080;border-radius:6px\"></div>");
    CHECK(render_element(element(box("text-field", {{"id", "f"}, {"placeholder", "Name"}}))) ==
          "<input id=\"f\" type=\"text\" placeholder=\"Name\" style=\"position:absolute;left:10px;top:20px;z-index:3;"
          "width:40px;height:50px;box-sizing:border-box\">");
    CHECK(render_element(element(box("video", {{"src", "https://v/x.mp4"}}))) ==
          "<video src=\"https://v/x.mp4\" controls style=\"position:absolute;left:10px;top:20px;z-index:3;width:40px;"
          "height:50px\"></video>");
    CHECK(render_element(element({{"type", "script"}, {"code", ""}})).empty());
  }

  TEST_CASE("fractional geometry and hidden elements") {
    Element el = element(box("shape", {{"x", 0.5}, {"w", 33.25}, {"display", false}, {"z", -1}}));
    CHECK(element_style(el) == "position:absolute;left:0.5px;top:20px;z-index:-1;width:33.25px;height:50px;display:none");
  }

  TEST_CASE("text is always escaped") {
    Document d = doc_of(800, {box("text", {{"id", "t"}, {"text", "<script>alert(1)</script> & \"q\""}}),
                              box("img", {{"src", "x\" onerror=\"alert(1)"}, {"alt", "'"}}),
                              {{"type", "script"}, {"code", "on(\"click\",\"t\"){swap(\"</script><b>\",\"t\");}"}}});
    HtmlPage page = transpile_document(d);
    CHECK(page.text.find("<script>alert") == std::string::npos);
    CHECK(page.text.find("&lt;script&gt;alert(1)&lt;/script&gt; &amp; &quot;q&quot;") != std::string::npos);
    CHECK(page.text.find("src=\"x&quot; onerror=&quot;alert(1)\"") != std::string::npos);
    // exactly one script element, closed once
    std::size_t closes = 0;
    for (auto at = page.text.find("</script>"); at != std::string::npos; at = page.text.find("</script>", at + 1)) ++closes;
    CHECK(closes == 1);
    auto tree = analyze::parse_html(page.text);
    CHECK(body_of(tree).children.size() == 3);
  }

  TEST_CASE("completeness: every id exactly once, none invented") {
    maml::testing::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
      Document d = maml::testing::random_document(rng, 20, true);
      auto tree = analyze::parse_html(transpile_document(d).text);
      std::map<std::string, int> expected;
      for (const auto& el : d.elements)
        if (auto id = el.id()) ++expected[std::string(*id)];
      CHECK(id_counts(tree) == expected);
    }
  }

  TEST_CASE("self-containment and flatness") {
    maml::testing::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
      Document d = maml::testing::random_document(rng, 30, true);
      HtmlPage page = transpile_document(d);
      auto report = analyze::report_page(page.text);
      CHECK(report.external_script_count == 0);
      CHECK(report.external_stylesheet_count == 0);
      CHECK(report.external_request_count == static_cast<std::int64_t>(page.asset_manifest.size()));
      CHECK(report.max_dom_depth <= 4);
      CHECK(page.text.find("<link") == std::string::npos);
      CHECK(page.text.find("<style") == std::string::npos);
      std::set<std::string> unique(page.asset_manifest.begin(), page.asset_manifest.end());
      CHECK(unique.size() == page.asset_manifest.size());
    }
  }

  TEST_CASE("element count follows the structural guarantee") {
    // html, head, 2 meta, body, script; plus one node per element and the
    // internal nodes of dropdowns (options) and carousels (frames + 2 controls).
    maml::testing::Rng rng(43);
    for (int i = 0; i < 30; ++i) {
      Document d = maml::testing::random_document(rng, maml::testing::uniform_int(rng, 0, 60), false);
      std::int64_t expected = 6;
      for (const auto& el : d.elements) {
        expected += 1;
        if (el.kind() == ElementKind::Dropdown) expected += static_cast<std::int64_t>(el.list_prop("options")->size());
        if (el.kind() == ElementKind::Carousel) expected += static_cast<std::int64_t>(el.list_prop("srcs")->size()) + 2;
      }
      CHECK(analyze::report_page(transpile_document(d).text).element_count == expected);
    }
  }

  TEST_CASE("manifest lists media once, in first-use order") {
    Document d = doc_of(800, {box("img", {{"src", "https://a/1.png"}}),
                              box("carousel", {{"srcs", {"https://a/2.png", "https://a/1.png"}}}),
                              box("video", {{"src", "https://a/3.mp4"}}), box("img", {{"src", "https://a/2.png"}})});
    HtmlPage page = transpile_document(d);
    CHECK(page.asset_manifest == std::vector<std::string>{"https://a/1.png", "https://a/2.png", "https://a/3.mp4"});
    CHECK(manifest_json(page) == "[\"https://a/1.png\",\"https://a/2.png\",\"https://a/3.mp4\"]\n");
  }

  TEST_CASE("determinism") {
    maml::testing::Rng rng(51);
    Document d = maml::testing::random_document(rng, 40, true);
    std::string first = transpile_document(d).text;
    for (int i = 0; i < 5; ++i) CHECK(transpile_document(d).text == first);
  }

  TEST_CASE("runtime: budget, tables and the documented wiring") {
    CHECK(runtime_library().size() <= kRuntimeBudgetBytes);
    CHECK(runtime_library().starts_with("(function(W,G,L){"));

    Document d = doc_of(1200, {box("button", {{"id", "button1"}, {"text", "Go"}, {"x", 100}, {"w", 200}})});
    auto wiring = script::lower_script(script::parse_script(maml::testing::kDocClickScript));
    std::string rt = render_runtime(ScaleModel::from_document(d), wiring);
    CHECK(rt == std::string(runtime_library()) +
                    "(1200,[[100,200]],[{\"on\":\"click\",\"id\":\"button1\",\"do\":[[\"show\",\"image2\"],"
                    "[\"hide\",\"image1\"],[\"swap\",{\"val\":\"input3\"},\"text3\"]]}]);");
    CHECK(render_runtime(ScaleModel::from_document(doc_of(1200, {})), {}) == std::string(runtime_library()) + "(1200,[],[]);");
  }

  TEST_CASE("a script that fails its check is refused") {
    Document d = doc_of(800, {box("shape", {{"id", "s"}}), {{"type", "script"}, {"code", "on(\"click\",\"s\"){swap(\"x\",\"s\");}"}}});
    CHECK_THROWS_AS(transpile_document(d), std::invalid_argument);
  }

  TEST_CASE("scale: x=100,w=200 authored at 1200, drawn at 600") {
    Geometry g{100, 70, 4, 200, 30};
    Geometry r = rescale(g, 1200, 600);
    CHECK(r.x == 50);
    CHECK(r.w == 100);
    CHECK(r.y == 70);
    CHECK(r.h == 30);
    CHECK(r.z == 4);

    Document d = doc_of(1200, {box("shape", {{"x", 100}, {"w", 200}}), {{"type", "script"}, {"code", ""}}});
    ScaleModel m = ScaleModel::from_document(d);
    CHECK(m.authored == std::vector<AuthoredColumn>{{100, 200}});
    CHECK(m.factor(600) == 0.5);
    CHECK(m.rescale(600) == std::vector<AuthoredColumn>{{50, 100}});
    CHECK(authored_table_json(m) == "[[100,200]]");
  }

  TEST_CASE("scale: property over random geometry") {
    maml::testing::Rng rng(61);
    std::uniform_real_distribution<double> coord(0, 5000), width(1, 3000), vw(200, 4000);
    for (int i = 0; i < 5000; ++i) {
      Geometry g{coord(rng), coord(rng), maml::testing::uniform_int(rng, -9, 9), width(rng), width(rng)};
      double original = std::floor(vw(rng)), live = vw(rng);
      double s = live / original;
      Geometry once = rescale(g, original, live);
      CHECK(once.x == g.x * s);
      CHECK(once.w == g.w * s);
      CHECK(once.y == g.y);
      CHECK(once.h == g.h);
      CHECK(rescale(g, original, original) == g);
      // every rescale starts from authored values, so a second resize to the
      // same width reproduces the first
      double other = vw(rng);
      (void)rescale(g, original, other);
      CHECK(rescale(g, original, live) == once);
    }
  }
}
