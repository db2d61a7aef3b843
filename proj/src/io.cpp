#include "wil/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace wil {

using nlohmann::json;

std::string_view to_string(ItemKind kind) {
  return kind == ItemKind::Circles ? "circles" : "rects";
}

bool operator==(const InstanceFile& a, const InstanceFile& b) {
  if (a.kind != b.kind || a.name != b.name || a.seed != b.seed || a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.circles.items.size(); ++i) {
    const auto& x = a.circles.items[i];
    const auto& y = b.circles.items[i];
    if (x.id != y.id || x.radius != y.radius || x.mass != y.mass) return false;
  }
  for (std::size_t i = 0; i < a.rects.items.size(); ++i) {
    const auto& x = a.rects.items[i];
    const auto& y = b.rects.items[i];
    if (x.id != y.id || x.edge_a != y.edge_a || x.edge_b != y.edge_b || x.mass != y.mass)
      return false;
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed for " + path.string());
}

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw Error(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(where + ": missing field \"" + key + "\"");
  return *it;
}

double number(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) throw Error(where + "." + key + ": expected a number");
  return v.get<double>();
}

double positive(const json& obj, const std::string& key, const std::string& where) {
  const double v = number(obj, key, where);
  if (!(v > 0.0) || !std::isfinite(v)) throw Error(where + "." + key + ": must be positive");
  return v;
}

ItemKind parse_kind(const json& root) {
  const json& k = field(root, "kind", "root");
  if (k == "circles") return ItemKind::Circles;
  if (k == "rects") return ItemKind::Rects;
  throw Error("root.kind: expected \"circles\" or \"rects\"");
}

std::string where_item(std::size_t i) { return "items[" + std::to_string(i) + "]"; }

}  // namespace

InstanceFile parse_instance_text(std::string_view text) {
  const json root = parse_json(text);
  InstanceFile inst;
  inst.kind = parse_kind(root);
  if (const auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) throw Error("root.name: expected a string");
    inst.name = it->get<std::string>();
  }
  if (const auto it = root.find("seed"); it != root.end()) {
    if (!it->is_number_unsigned()) throw Error("root.seed: expected a non-negative integer");
    inst.seed = it->get<std::uint64_t>();
  }
  const json& items = field(root, "items", "root");
  if (!items.is_array()) throw Error("root.items: expected an array");
  if (items.empty()) throw Error("empty item list");

  for (std::size_t i = 0; i < items.size(); ++i) {
    const json& it = items[i];
    const std::string where = where_item(i);
    const int id = static_cast<int>(i) + 1;
    if (inst.kind == ItemKind::Circles) {
      inst.circles.items.push_back({id, positive(it, "r", where), positive(it, "m", where)});
    } else {
      inst.rects.items.push_back(
          {id, positive(it, "a", where), positive(it, "b", where), positive(it, "m", where)});
    }
  }
  return inst;
}

InstanceFile parse_instance(const std::filesystem::path& path) {
  try {
    return parse_instance_text(read_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::string write_instance(const InstanceFile& instance) {
  json root;
  root["kind"] = to_string(instance.kind);
  if (!instance.name.empty()) root["name"] = instance.name;
  if (instance.seed) root["seed"] = *instance.seed;
  json items = json::array();
  if (instance.kind == ItemKind::Circles) {
    for (const auto& it : instance.circles.items) items.push_back({{"r", it.radius}, {"m", it.mass}});
  } else {
    for (const auto& it : instance.rects.items)
      items.push_back({{"a", it.edge_a}, {"b", it.edge_b}, {"m", it.mass}});
  }
  root["items"] = std::move(items);
  return root.dump(2) + "\n";
}

double LayoutFile::envelope_radius() const {
  return std::visit([](const auto& l) { return l.envelope_radius; }, layout);
}

std::string write_layout(const LayoutFile& file) {
  json root;
  json items = json::array();
  std::visit(
      [&](const auto& l) {
        using L = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<L, CircleLayout>) {
          root["kind"] = "circles";
          for (const auto& pc : l.placed)
            items.push_back({{"id", pc.item.id},
                             {"r", pc.item.radius},
                             {"m", pc.item.mass},
                             {"x", pc.center.x},
                             {"y", pc.center.y}});
        } else {
          root["kind"] = "rects";
          for (const auto& pr : l.placed)
            items.push_back({{"id", pr.item.id},
                             {"a", pr.item.edge_a},
                             {"b", pr.item.edge_b},
                             {"m", pr.item.mass},
                             {"x", pr.placement.center.x},
                             {"y", pr.placement.center.y},
                             {"orientation", pr.placement.orientation == Orientation::Deg0 ? 0 : 90}});
        }
        root["envelope_radius"] = l.envelope_radius;
        root["mass_center"] = {l.mass_center.x, l.mass_center.y};
        root["imbalance_about_origin"] = l.imbalance_about_origin;
        root["fallback_used"] = l.fallback_used;
      },
      file.layout);
  root["order"] = file.order;
  root["items"] = std::move(items);
  return root.dump(2) + "\n";
}

LayoutFile parse_layout_text(std::string_view text) {
  const json root = parse_json(text);
  const ItemKind kind = parse_kind(root);
  const json& items = field(root, "items", "root");
  if (!items.is_array() || items.empty()) throw Error("root.items: expected a non-empty array");

  LayoutFile file;
  const json& order = field(root, "order", "root");
  if (!order.is_array()) throw Error("root.order: expected an array");
  for (const auto& v : order) {
    if (!v.is_number_integer()) throw Error("root.order: expected integers");
    file.order.push_back(v.get<int>());
  }

  auto read_id = [](const json& it, const std::string& where) {
    const json& v = field(it, "id", where);
    if (!v.is_number_integer()) throw Error(where + ".id: expected an integer");
    return v.get<int>();
  };
  auto read_point = [](const json& it, const std::string& where) {
    return Point{number(it, "x", where), number(it, "y", where)};
  };

  if (kind == ItemKind::Circles) {
    CircleLayout l;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string where = where_item(i);
      const CircleItem item{read_id(items[i], where), positive(items[i], "r", where),
                            positive(items[i], "m", where)};
      l.placed.push_back({item, read_point(items[i], where)});
    }
    refresh_derived(l);
    l.fallback_used = root.value("fallback_used", false);
    file.layout = std::move(l);
  } else {
    RectLayout l;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string where = where_item(i);
      const RectItem item{read_id(items[i], where), positive(items[i], "a", where),
                          positive(items[i], "b", where), positive(items[i], "m", where)};
      const double deg = number(items[i], "orientation", where);
      if (deg != 0.0 && deg != 90.0) throw Error(where + ".orientation: expected 0 or 90");
      l.placed.push_back({item, {read_point(items[i], where), deg == 0.0 ? Orientation::Deg0 : Orientation::Deg90}});
    }
    refresh_derived(l);
    l.fallback_used = root.value("fallback_used", false);
    file.layout = std::move(l);
  }

  const double stored = number(root, "envelope_radius", "root");
  const double recomputed = file.envelope_radius();
  if (std::abs(stored - recomputed) > 1e-9 * std::max(1.0, recomputed))
    throw Error("root.envelope_radius: does not match the placements");
  return file;
}

LayoutFile parse_layout(const std::filesystem::path& path) {
  try {
    return parse_layout_text(read_file(path));
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace wil
