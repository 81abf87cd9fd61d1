#include "rectlay/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "rectlay/errors.hpp"
#include "rectlay/families.hpp"
#include "rectlay/feasibility.hpp"
#include "rectlay/io.hpp"
#include "rectlay/oracle.hpp"
#include "rectlay/pipeline.hpp"
#include "rectlay/svg.hpp"
#include "rectlay/treelayout.hpp"

namespace rectlay {
namespace {

struct Options {
  std::string graph_file, layout_file, out, svg;
  bool tree = false, raw = false;
  std::string mode = "strong";
  long long max_w = 6, max_h = 6;
  bool force = false;
  int scale = 20;
  bool labels = false, no_shade = false;
  std::string family;
  std::vector<long long> params;
  bool enclosed = false;
  int subdivision = 0;
  std::vector<long long> nx, ny, nb;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty())
    out << text;
  else
    write_text_file(o.out, text);
}

GraphDoc load_graph(const std::string& path) { return graph_doc_from_json(read_json_file(path)); }

int cmd_check(const Options& o, std::ostream& out) {
  GraphDoc d = load_graph(o.graph_file);
  if (!is_connected(d.graph)) throw PreconditionViolation("graph must be connected");
  FeasibilityVerdict v = is_layoutable(d.graph);
  out << dump(to_json(v));
  return v.layoutable ? 0 : 1;
}

int cmd_layout(const Options& o, std::ostream& out, std::ostream& err) {
  GraphDoc d = load_graph(o.graph_file);
  Layout l;
  LayoutMode check = LayoutMode::Strong;
  if (o.tree) {
    if (!d.root) throw FormatError("--tree needs a \"root\" field in the graph file");
    RootedTree t = RootedTree::from_graph(d.graph, *d.root);
    const TreeStyle style = o.raw ? TreeStyle::Compact : TreeStyle::Separated;
    l = layout_tree_B(t, heavy_path_partition(t), style);
    if (o.raw) check = LayoutMode::Weak;
  } else {
    if (!is_connected(d.graph)) throw PreconditionViolation("graph must be connected");
    try {
      l = layout_graph(d.graph);
    } catch (const NotLayoutable& e) {
      err << e.what() << "\n";
      out << dump(to_json(e.verdict()));
      return 1;
    }
  }
  auto rep = validate_layout(l, d.graph, check);
  if (!rep.ok) throw Error("layout failed validation: " + rep.summary());
  emit(o, out, dump(to_json(l)));
  if (!o.svg.empty()) write_text_file(o.svg, render_svg(l, {o.scale, !o.no_shade, o.labels}));
  return 0;
}

int param(const Options& o, std::size_t i) {
  if (i >= o.params.size()) throw InvalidParameters("family \"" + o.family + "\" needs more parameters");
  if (o.params[i] < 0 || o.params[i] > 1'000'000) throw InvalidParameters("parameter out of range");
  return static_cast<int>(o.params[i]);
}

int cmd_gen(const Options& o, std::ostream& out) {
  GraphDoc d;
  Json ann;
  ann["family"] = o.family;
  if (o.family == "ladder") {
    d.graph = gen_ladder(param(o, 0), o.subdivision);
  } else if (o.family == "ijladder") {
    d.graph = gen_ij_ladder(param(o, 0), param(o, 1));
  } else if (o.family == "accordion") {
    d.graph = gen_accordion(param(o, 0), o.enclosed);
  } else if (o.family == "npgadget") {
    GadgetGraph gg = gen_np_gadget(NMTSInstance::make(o.nx, o.ny, o.nb));
    d.graph = std::move(gg.graph);
    ann["scale"] = gg.scale;
    ann["delta"] = gg.delta;
    ann["width"] = gg.width;
    ann["height"] = gg.height;
    ann["tags"] = gg.tags;
  } else if (o.family == "binary" || o.family == "startree" || o.family == "complete") {
    RootedTree t = o.family == "binary"     ? gen_complete_binary(param(o, 0))
                   : o.family == "startree" ? gen_star_tree(param(o, 0))
                                            : complete_tree(param(o, 0), param(o, 1));
    d.graph = t.graph();
    d.root = t.root;
  } else {
    throw InvalidParameters("unknown family \"" + o.family + "\"");
  }
  d.annotations = std::move(ann);
  emit(o, out, dump(to_json(d)));
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out) {
  Layout l = layout_from_json(read_json_file(o.layout_file));
  GraphDoc d = load_graph(o.graph_file);
  auto rep = validate_layout(l, d.graph, o.mode == "weak" ? LayoutMode::Weak : LayoutMode::Strong);
  out << dump(to_json(rep));
  return rep.ok ? 0 : 1;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  GraphDoc d = load_graph(o.graph_file);
  if (d.graph.vertex_count() > 8 && !o.force)
    throw InvalidParameters("oracle refuses graphs with more than 8 vertices without --force");
  OracleResult r = brute_force_min_area(d.graph, o.max_w, o.max_h);
  emit(o, out, dump(to_json(r)));
  return r.min_area ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  Layout l = layout_from_json(read_json_file(o.layout_file));
  if (l.rects.empty()) throw FormatError("layout has no rectangles");
  emit(o, out, render_svg(l, {o.scale, !o.no_shade, o.labels}));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rectangular contact layouts of planar graphs"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Decide whether a graph has a rectangular layout");
  check->add_option("graph", o.graph_file)->required();

  auto* layout = app.add_subcommand("layout", "Compute a strong layout");
  layout->add_option("graph", o.graph_file)->required();
  layout->add_flag("--tree", o.tree, "Use the heavy-path tree layout (needs a root)");
  layout->add_flag("--raw", o.raw, "With --tree, emit the compact weak layout");
  layout->add_option("--out", o.out);
  layout->add_option("--svg", o.svg);
  layout->add_option("--scale", o.scale)->check(CLI::PositiveNumber);
  layout->add_flag("--labels", o.labels);

  auto* gen = app.add_subcommand("gen", "Generate a graph family");
  gen->add_option("family", o.family, "ladder, ijladder, accordion, npgadget, binary, startree, complete")
      ->required();
  gen->add_option("params", o.params);
  gen->add_flag("--enclosed", o.enclosed);
  gen->add_option("--subdivision", o.subdivision)->check(CLI::NonNegativeNumber);
  gen->add_option("--x", o.nx, "NMTS sizes X");
  gen->add_option("--y", o.ny, "NMTS sizes Y");
  gen->add_option("--b", o.nb, "NMTS targets B");
  gen->add_option("--out", o.out);

  auto* validate = app.add_subcommand("validate", "Check a layout against a graph");
  validate->add_option("layout", o.layout_file)->required();
  validate->add_option("graph", o.graph_file)->required();
  validate->add_option("--mode", o.mode)->check(CLI::IsMember({"strong", "weak"}));

  auto* oracle = app.add_subcommand("oracle", "Exact minimum area by exhaustive search");
  oracle->add_option("graph", o.graph_file)->required();
  oracle->add_option("--max-w", o.max_w)->check(CLI::PositiveNumber);
  oracle->add_option("--max-h", o.max_h)->check(CLI::PositiveNumber);
  oracle->add_flag("--force", o.force);
  oracle->add_option("--out", o.out);

  auto* render = app.add_subcommand("render", "Render a layout as SVG");
  render->add_option("layout", o.layout_file)->required();
  render->add_option("--out", o.out);
  render->add_option("--scale", o.scale)->check(CLI::PositiveNumber);
  render->add_flag("--labels", o.labels);
  render->add_flag("--no-shade", o.no_shade);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*layout) return cmd_layout(o, out, err);
    if (*gen) return cmd_gen(o, out);
    if (*validate) return cmd_validate(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rectlay
