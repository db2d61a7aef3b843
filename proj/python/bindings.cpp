#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wil/wil.hpp"

namespace py = pybind11;
using namespace wil;

namespace {

template <class Item>
void check_ids(const std::vector<Item>& items) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id != static_cast<int>(i) + 1) throw Error("item ids must be contiguous from 1");
}

py::list placed_rows(const CircleLayout& l) {
  py::list rows;
  for (const auto& pc : l.placed) rows.append(py::make_tuple(pc.item.id, pc.center.x, pc.center.y));
  return rows;
}

py::list placed_rows(const RectLayout& l) {
  py::list rows;
  for (const auto& pr : l.placed)
    rows.append(py::make_tuple(pr.item.id, pr.placement.center.x, pr.placement.center.y,
                               pr.placement.orientation == Orientation::Deg0 ? 0 : 90));
  return rows;
}

template <class Layout>
void bind_layout(py::module_& m, const char* name) {
  py::class_<Layout>(m, name)
      .def_property_readonly("placed", [](const Layout& l) { return placed_rows(l); },
                             "Placement-order rows: (id, x, y) or (id, x, y, orientation)")
      .def_property_readonly("mass_center",
                             [](const Layout& l) { return py::make_tuple(l.mass_center.x, l.mass_center.y); })
      .def_readonly("envelope_radius", &Layout::envelope_radius)
      .def_readonly("imbalance_about_origin", &Layout::imbalance_about_origin)
      .def_readonly("fallback_used", &Layout::fallback_used)
      .def_readonly("candidate_evaluations", &Layout::candidate_evaluations);
}

template <class Item, class Instance>
py::dict solve_items(const std::vector<Item>& items, const AcoParams& params) {
  check_ids(items);
  const Instance inst{items};
  auto r = [&] {
    py::gil_scoped_release release;
    return solve(inst, params);
  }();
  py::dict d;
  d["best_order"] = r.best_order;
  d["best_envelope"] = r.best_envelope;
  d["per_iteration_best"] = r.per_iteration_best;
  d["construction_count"] = r.construction_count;
  d["layout"] = py::cast(std::move(r.best_layout));
  return d;
}

template <class Item, class Instance>
py::dict oracle_items(const std::vector<Item>& items, std::size_t limit) {
  check_ids(items);
  const Instance inst{items};
  OracleOptions opt;
  opt.limit_n = limit;
  const OracleResult r = [&] {
    py::gil_scoped_release release;
    return exhaustive_best_order(inst, opt);
  }();
  py::dict d;
  d["best_order"] = r.best_order;
  d["best_envelope"] = r.best_envelope;
  d["orders_evaluated"] = r.orders_evaluated;
  return d;
}

py::list items_of(const InstanceFile& f) {
  return f.kind == ItemKind::Circles ? py::cast(f.circles.items) : py::cast(f.rects.items);
}

ItemKind parse_kind(const std::string& kind) {
  if (kind == "circles") return ItemKind::Circles;
  if (kind == "rects") return ItemKind::Rects;
  throw Error("kind must be \"circles\" or \"rects\"");
}

}  // namespace

PYBIND11_MODULE(_wil, m) {
  m.doc() = "Weighted item layout core";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::enum_<Orientation>(m, "Orientation").value("Deg0", Orientation::Deg0).value("Deg90", Orientation::Deg90);
  py::enum_<AcoVariant>(m, "AcoVariant").value("AS", AcoVariant::AS).value("MMAS", AcoVariant::MMAS);

  py::class_<CircleItem>(m, "CircleItem")
      .def(py::init([](int id, double radius, double mass) { return CircleItem{id, radius, mass}; }),
           py::arg("id"), py::arg("radius"), py::arg("mass"))
      .def_readwrite("id", &CircleItem::id)
      .def_readwrite("radius", &CircleItem::radius)
      .def_readwrite("mass", &CircleItem::mass)
      .def("__repr__", [](const CircleItem& c) {
        return "CircleItem(id=" + std::to_string(c.id) + ", radius=" + std::to_string(c.radius) +
               ", mass=" + std::to_string(c.mass) + ")";
      });

  py::class_<RectItem>(m, "RectItem")
      .def(py::init([](int id, double a, double b, double mass) { return RectItem{id, a, b, mass}; }),
           py::arg("id"), py::arg("edge_a"), py::arg("edge_b"), py::arg("mass"))
      .def_readwrite("id", &RectItem::id)
      .def_readwrite("edge_a", &RectItem::edge_a)
      .def_readwrite("edge_b", &RectItem::edge_b)
      .def_readwrite("mass", &RectItem::mass);

  bind_layout<CircleLayout>(m, "CircleLayout");
  bind_layout<RectLayout>(m, "RectLayout");

  py::class_<AcoParams>(m, "AcoParams")
      .def(py::init<>())
      .def_readwrite("variant", &AcoParams::variant)
      .def_readwrite("ants", &AcoParams::ants)
      .def_readwrite("iterations", &AcoParams::iterations)
      .def_readwrite("alpha", &AcoParams::alpha)
      .def_readwrite("beta", &AcoParams::beta)
      .def_readwrite("rho", &AcoParams::rho)
      .def_readwrite("seed", &AcoParams::seed)
      .def_readwrite("threads", &AcoParams::threads);

  m.def("place_circles",
        [](const std::vector<int>& order, const std::vector<CircleItem>& items) {
          check_ids(items);
          return place_circles(order, items);
        },
        py::arg("order"), py::arg("items"), "Greedy circle layout for a placement order of ids.");
  m.def("place_rects",
        [](const std::vector<int>& order, const std::vector<RectItem>& items) {
          check_ids(items);
          return place_rects(order, items);
        },
        py::arg("order"), py::arg("items"), "Greedy rectangle layout for a placement order of ids.");

  m.def("solve", &solve_items<CircleItem, CircleInstance>, py::arg("items"), py::arg("params") = AcoParams{});
  m.def("solve", &solve_items<RectItem, RectInstance>, py::arg("items"), py::arg("params") = AcoParams{});
  m.def("oracle", &oracle_items<CircleItem, CircleInstance>, py::arg("items"), py::arg("limit") = 8);
  m.def("oracle", &oracle_items<RectItem, RectInstance>, py::arg("items"), py::arg("limit") = 8);

  m.def("generate_instance",
        [](const std::string& kind, int n, std::uint64_t seed, std::pair<double, double> size,
           std::pair<double, double> mass) {
          GenerateSpec g;
          g.kind = parse_kind(kind);
          g.n = n;
          g.seed = seed;
          g.size = {size.first, size.second};
          g.mass = {mass.first, mass.second};
          return items_of(generate_instance(g));
        },
        py::arg("kind"), py::arg("n"), py::arg("seed") = 1, py::arg("size") = std::pair{5.0, 15.0},
        py::arg("mass") = std::pair{1.0, 10.0});
  m.def("load_instance", [](const std::string& path) {
    const InstanceFile f = parse_instance(path);
    return py::make_tuple(std::string(to_string(f.kind)), items_of(f));
  });

  m.def("layout_json", [](const std::vector<int>& order, const CircleLayout& l) {
    return write_layout({order, l});
  });
  m.def("layout_json", [](const std::vector<int>& order, const RectLayout& l) {
    return write_layout({order, l});
  });
  m.def("render_svg", [](const std::string& layout_json) { return render_svg(parse_layout_text(layout_json)); });
}
