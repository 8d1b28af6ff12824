// trirecom: JSON state/trace files and SVG rendering.
#include "trirecom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace trirecom {

using nlohmann::json;

namespace {

json header(const char* format, const Partition& p) {
  const SizeTargets& k = p.targets();
  return {{"format", format}, {"version", kTraceFormatVersion}, {"n", p.region().n()}, {"k", {k[1], k[2], k[3]}}};
}

json parse(const std::string& text, const char* format) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != format) throw std::invalid_argument(std::string("not a ") + format + " file");
  if (j.value("version", 0) != kTraceFormatVersion)
    throw std::invalid_argument("unsupported version " + j.value("version", json()).dump());
  return j;
}

Labels labels_of(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("label array expected");
  Labels out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw std::invalid_argument("labels must be integers");
    out.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  return out;
}

Partition partition_of(const json& j, const json& labels) {
  try {
    auto region = std::make_shared<const TriRegion>(j.at("n").get<int>());
    const auto k = j.at("k").get<std::array<int, 3>>();
    return {region, SizeTargets{k}, labels_of(labels)};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad header: ") + e.what());
  }
}

}  // namespace

std::string state_to_json(const Partition& p) {
  json j = header("trirecom-state", p);
  j["labels"] = p.labels();
  return j.dump() + "\n";
}

std::string trace_to_json(const Trace& t) {
  json j = header("trirecom-trace", t.source);
  j["source"] = t.source.labels();
  json steps = json::array();
  for (std::size_t k = 0; k < t.steps.size(); ++k)
    steps.push_back({{"untouched", t.steps[k].untouched},
                     {"after", t.steps[k].after},
                     {"note", k < t.notes.size() ? t.notes[k] : std::string()}});
  j["steps"] = std::move(steps);
  return j.dump(1) + "\n";
}

Partition state_from_json(const std::string& text) {
  const json j = parse(text, "trirecom-state");
  return partition_of(j, j.value("labels", json()));
}

Trace trace_from_json(const std::string& text) {
  const json j = parse(text, "trirecom-trace");
  Trace t(partition_of(j, j.value("source", json())));
  const json steps = j.value("steps", json::array());
  if (!steps.is_array()) throw std::invalid_argument("steps must be an array");
  for (const auto& s : steps) {
    if (!s.is_object() || !s.contains("untouched") || !s.contains("after"))
      throw std::invalid_argument("step needs untouched and after");
    t.steps.push_back({s["untouched"].get<int>(), labels_of(s["after"])});
    t.notes.push_back(s.value("note", ""));
  }
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename into " + path);
}

namespace {

constexpr double kSpacing = 24.0;
constexpr const char* kColors[4] = {"#999999", "#d62728", "#1f77b4", "#f2c40f"};

struct Point {
  double x, y;
};

Point place(const TriRegion& r, Vertex v) {
  const double h = kSpacing * std::sqrt(3.0) / 2.0;
  return {h * (v.col - 1), kSpacing * (v.row - (v.col + 1) / 2.0 + (r.n() - 1) / 2.0)};
}

double frame_width(const TriRegion& r) { return kSpacing * std::sqrt(3.0) / 2.0 * (r.n() - 1) + 2 * kSpacing; }
double frame_height(const TriRegion& r) { return kSpacing * (r.n() - 1) + 2.6 * kSpacing; }

void draw_frame(std::ostringstream& out, const Partition& p, double ox, double oy, const std::string& caption) {
  const TriRegion& r = p.region();
  out << "<g transform=\"translate(" << ox + kSpacing << "," << oy + kSpacing << ")\">\n";
  for (int id = 0; id < r.size(); ++id) {
    const Point a = place(r, r.vertex(id));
    for (int k : {1, 2, 3}) {
      const int nb = r.nbrs(id)[static_cast<std::size_t>(k)];
      if (nb == kOutside) continue;
      const Point b = place(r, r.vertex(nb));
      const bool same = p.label(id) == p.label(nb);
      out << "<line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\"" << b.y << "\" stroke=\""
          << (same ? kColors[p.label(id)] : "#cccccc") << "\" stroke-width=\"" << (same ? 3 : 1) << "\"/>\n";
    }
  }
  for (int id = 0; id < r.size(); ++id) {
    const Point a = place(r, r.vertex(id));
    out << "<circle cx=\"" << a.x << "\" cy=\"" << a.y << "\" r=\"" << kSpacing * 0.3 << "\" fill=\""
        << kColors[p.label(id)] << "\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
  }
  if (!caption.empty())
    out << "<text x=\"0\" y=\"" << kSpacing * (r.n() - 1) + kSpacing * 0.9
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << caption << "</text>\n";
  out << "</g>\n";
}

std::string svg_open(double w, double h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
      << " " << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const Partition& p, const std::string& caption) {
  const TriRegion& r = p.region();
  std::ostringstream out;
  out << svg_open(frame_width(r), frame_height(r));
  draw_frame(out, p, 0, 0, caption);
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const Trace& t) {
  const TriRegion& r = t.source.region();
  const std::size_t frames = t.steps.size() + 1;
  const std::size_t per_row = std::min<std::size_t>(frames, 6);
  const std::size_t rows = (frames + per_row - 1) / per_row;
  const double fw = frame_width(r), fh = frame_height(r);
  std::ostringstream out;
  out << svg_open(fw * static_cast<double>(per_row), fh * static_cast<double>(rows));
  Partition cur = t.source;
  for (std::size_t f = 0; f < frames; ++f) {
    if (f > 0) cur = t.source.with_labels(t.steps[f - 1].after);
    const double ox = fw * static_cast<double>(f % per_row), oy = fh * static_cast<double>(f / per_row);
    draw_frame(out, cur, ox, oy, f == 0 ? "start" : "step " + std::to_string(f));
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace trirecom
