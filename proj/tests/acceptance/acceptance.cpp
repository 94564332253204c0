// Acceptance run: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cocreate/error.hpp"
#include "cocreate/geometry.hpp"
#include "cocreate/layout.hpp"
#include "cocreate/serialize.hpp"
#include "cocreate/service.hpp"
#include "cocreate/validate.hpp"
#include "cocreate/workspace.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cocreate;
using geom::Vec2;
using testsupport::Env;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 5) problems.push_back(what);
  }
};

const std::map<std::string, oracle::RawSpec>& raw() {
  static const auto cat = oracle::raw_catalog(testsupport::data_path("catalog.json"));
  return cat;
}

GenConfig seeded(std::uint64_t seed) {
  GenConfig c;
  c.seed = seed;
  return c;
}

const char* kRooms[] = {"bedroom_4x3", "living_6x4", "l_shaped"};

Outcome generator_safety() {
  Outcome out;
  const auto& env = Env::get();
  double seconds = 0.0;
  int clean = 0, total = 0;
  for (const char* name : kRooms) {
    const Room room = testsupport::room(name);
    const auto poly = oracle::to_poly(room.footprint);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto res = env.gen().complete_scene(room, {}, seeded(seed));
      seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto boxes = oracle::boxes_of(res.objects, raw());
      const std::string tag = std::string(name) + " seed " + std::to_string(seed);
      out.require(oracle::overlap_pairs(boxes, 1e-4) == 0, tag + ": overlap");
      for (const auto& b : boxes) out.require(oracle::dense_contains(poly, b.rect, 0.005), tag + ": " + b.id + " outside");
      bool exhausted = false;
      for (const auto& w : res.warnings) exhausted |= w.kind == "PlacementExhausted";
      clean += !exhausted;
      ++total;
    }
  }
  const double rate = static_cast<double>(clean) / total;
  out.require(rate >= 0.95, "clean seed rate below 95%");
  out.require(seconds < 5.0, "runtime over 5 s");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d runs, %.1f%% without PlacementExhausted, %.2f s", total, 100 * rate, seconds);
  out.detail = buf;
  return out;
}

// One independent engine per run so no state is shared between the two runs.
struct Engine {
  Catalog catalog = Catalog::from_file(testsupport::data_path("catalog.json"));
  PriorTable priors = PriorTable::from_file(testsupport::data_path("priors.json"));
  Synonyms synonyms = Synonyms::from_file(testsupport::data_path("synonyms.json"));
  Generator gen{catalog, priors};
  IntentParser parser{catalog.vocabulary(), synonyms};
};

std::string run_case(const Engine& e, int k, const std::vector<testsupport::CorpusLine>& corpus) {
  const Room room = testsupport::room(kRooms[k % 3]);
  const auto cfg = seeded(static_cast<std::uint64_t>(1000 + k));
  json out = json::array();
  auto warnings = [](const std::vector<GenWarning>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(to_json(w));
    return a;
  };
  switch (k % 5) {
    case 0: {
      const auto r = e.gen.complete_scene(room, {}, cfg);
      for (const auto& o : r.objects) out.push_back(to_json(o));
      out.push_back(warnings(r.warnings));
      break;
    }
    case 1: {
      const auto scene = e.gen.complete_scene(room, {}, cfg).objects;
      try {
        for (const auto& s : e.gen.suggest_objects(room, scene, Vec2{1.0 + 0.1 * (k % 4), 1.0}, {"chair", {}, {}}, cfg)) {
          out.push_back(to_json(s));
        }
      } catch (const Error& err) {
        out.push_back(std::string(to_string(err.code())));
      }
      break;
    }
    case 2: {
      const auto r = e.gen.generate_wireframes(room, {}, cfg);
      for (const auto& w : r.wireframes) out.push_back(to_json(w));
      out.push_back(warnings(r.warnings));
      break;
    }
    case 3: {
      const auto wfs = e.gen.generate_wireframes(room, {}, cfg).wireframes;
      const auto r = e.gen.populate_wireframes(room, wfs, cfg);
      for (const auto& o : r.objects) out.push_back(to_json(o));
      out.push_back(warnings(r.warnings));
      for (const auto& w : e.gen.abstract_scene(r.objects)) out.push_back(to_json(w));
      break;
    }
    default:
      for (std::size_t i = static_cast<std::size_t>(k); i < corpus.size(); i += 10) {
        out.push_back(testsupport::corpus_outcome(e.parser, corpus[i].command));
      }
  }
  return out.dump();
}

Outcome determinism() {
  Outcome out;
  const auto corpus = testsupport::load_corpus(testsupport::fixture_path("intent"));
  const Engine a, b;
  for (int k = 0; k < 50; ++k) {
    out.require(run_case(a, k, corpus) == run_case(b, k, corpus), "case " + std::to_string(k) + " differs");
  }
  out.detail = "50 cases over completion, suggestion, wireframes, population, abstraction and parsing";
  return out;
}

Outcome intent_corpus() {
  Outcome out;
  const auto corpus = testsupport::load_corpus(testsupport::fixture_path("intent"));
  std::set<std::string> kinds;
  int matched = 0, ignored = 0;
  bool chair = false, bed = false;
  for (const auto& line : corpus) {
    const auto got = testsupport::corpus_outcome(Env::get().intent(), line.command);
    const bool ok = got == line.expected;
    matched += ok;
    out.require(ok, line.command["text"].get<std::string>());
    if (line.expected.contains("kind")) kinds.insert(line.expected["kind"].get<std::string>());
    if (line.expected.contains("ignored_terms") && !line.expected["ignored_terms"].empty()) ++ignored;
    chair |= line.command["text"] == "Generate a minimalist wooden chair here";
    bed |= line.command["text"] == "Mark this area as a bed";
  }
  out.require(corpus.size() >= 60, "corpus shorter than 60 lines");
  out.require(kinds.size() == 7, "corpus covers " + std::to_string(kinds.size()) + " intents");
  out.require(ignored >= 5, "fewer than 5 lines with ignored terms");
  out.require(chair && bed, "reference utterances missing");
  out.detail = std::to_string(matched) + "/" + std::to_string(corpus.size()) + " exact, " +
               std::to_string(kinds.size()) + " intents, " + std::to_string(ignored) + " with ignored terms";
  return out;
}

Outcome suggestion_contract() {
  Outcome out;
  const auto& env = Env::get();
  std::mt19937_64 rng(2024);
  std::set<std::string> styles, materials;
  for (const auto& [id, s] : raw()) {
    styles.insert(s.style);
    materials.insert(s.material);
  }
  const std::vector<std::string> style_list(styles.begin(), styles.end()), material_list(materials.begin(), materials.end());
  const std::vector<std::string> cats{"chair", "stool", "side_table", "armchair", "floor_lamp", "ottoman", "nightstand",
                                      "bookshelf", "coffee_table", "desk"};
  int probes = 0, answered = 0, candidates = 0;
  while (probes < 100) {
    const Room room = testsupport::room(kRooms[probes % 3]);
    const auto poly = oracle::to_poly(room.footprint);
    const auto scene = env.gen().complete_scene(room, {}, seeded(static_cast<std::uint64_t>(probes % 7))).objects;
    const auto [lo, hi] = room_bounds(room);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uz(lo.z, hi.z);
    const Vec2 at{ux(rng), uz(rng)};
    if (!geom::point_in_polygon(room.footprint, at)) continue;
    CatalogFilter f;
    if (rng() % 4) f.category = cats[rng() % cats.size()];
    if (rng() % 3 == 0) f.style = style_list[rng() % style_list.size()];
    if (rng() % 3 == 0) f.material = material_list[rng() % material_list.size()];
    const std::string tag = "probe " + std::to_string(probes);
    ++probes;
    std::vector<Suggestion> got;
    try {
      got = env.gen().suggest_objects(room, scene, at, f, seeded(static_cast<std::uint64_t>(probes)));
    } catch (const Error& e) {
      out.require(e.code() == ErrorCode::NoCandidates, tag + ": unexpected " + std::string(to_string(e.code())));
      continue;
    }
    ++answered;
    out.require(!got.empty() && got.size() <= 3, tag + ": count " + std::to_string(got.size()));
    std::set<std::string> ids;
    const auto scene_boxes = oracle::boxes_of(scene, raw());
    for (const auto& s : got) {
      ++candidates;
      ids.insert(s.spec.spec_id);
      const auto& r = raw().at(s.spec.spec_id);
      const bool matches = (!f.category || r.category == *f.category) && (!f.style || r.style == *f.style) &&
                           (!f.material || r.material == *f.material);
      out.require(matches, tag + ": " + s.spec.spec_id + " misses the filter");
      const SceneObject o{"probe", s.spec.spec_id, s.pose.position, s.pose.yaw, s.pose.scale};
      const auto box = oracle::box_of(o, r);
      out.require(oracle::dense_contains(poly, box.rect, 0.005), tag + ": " + s.spec.spec_id + " outside the room");
      auto all = scene_boxes;
      all.push_back(box);
      out.require(oracle::overlap_pairs(all) == 0, tag + ": " + s.spec.spec_id + " overlaps the scene");
    }
    out.require(ids.size() == got.size(), tag + ": repeated spec ids");
  }
  out.require(answered > 0, "no probe produced candidates");
  out.detail = std::to_string(probes) + " probes, " + std::to_string(answered) + " answered, " +
               std::to_string(candidates) + " candidates checked";
  return out;
}

double norm360(double a) {
  a = std::fmod(a, 360.0);
  return a < 0 ? a + 360.0 : a;
}

Outcome wireframe_round_trip() {
  Outcome out;
  const auto& env = Env::get();
  std::mt19937_64 rng(77);
  std::vector<std::string> ids;
  for (const auto& [id, s] : raw()) ids.push_back(id);
  std::uniform_real_distribution<double> jitter(0.85, 1.15), wobble(0.97, 1.03), yaw(0.0, 360.0);
  int objects = 0;
  double worst_center = 0.0;
  for (int set = 0; set < 100; ++set) {
    const Room room = testsupport::room(kRooms[set % 3]);
    const auto [lo, hi] = room_bounds(room);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uz(lo.z, hi.z);
    std::vector<Wireframe> wfs;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      const auto& spec = raw().at(ids[rng() % ids.size()]);
      const double k = jitter(rng);
      Wireframe w;
      w.wf_id = "wf-" + std::to_string(i + 1);
      w.center = {ux(rng), uz(rng)};
      w.width = spec.w * k * wobble(rng);
      w.depth = spec.d * k * wobble(rng);
      w.yaw = (rng() % 2) ? 15.0 * static_cast<double>(rng() % 24) : yaw(rng);
      w.label = spec.category;
      wfs.push_back(w);
    }
    const std::string tag = "set " + std::to_string(set);
    const auto populated = env.gen().populate_wireframes(room, wfs, seeded(static_cast<std::uint64_t>(set)));
    const auto back = env.gen().abstract_scene(populated.objects);
    if (back.size() != wfs.size()) {
      out.require(false, tag + ": size changed");
      continue;
    }
    for (std::size_t i = 0; i < wfs.size(); ++i) {
      ++objects;
      const auto &a = wfs[i], &b = back[i];
      const double scale = populated.objects[i].scale;
      out.require(a.label == b.label, tag + ": label " + a.label + " -> " + b.label);
      const double dc = std::hypot(a.center.x - b.center.x, a.center.z - b.center.z);
      worst_center = std::max(worst_center, dc);
      out.require(dc <= 0.01, tag + ": center moved");
      out.require(scale >= 0.8 - 1e-12 && scale <= 1.2 + 1e-12, tag + ": scale outside the clamp");
      const double turn = norm360(b.yaw - a.yaw);
      const bool same = std::min(turn, 360.0 - turn) < 1e-6;
      const bool quarter = std::abs(turn - 90.0) < 1e-6;
      out.require(same || quarter, tag + ": yaw changed by " + std::to_string(turn));
      const double rw = b.width / (quarter ? a.depth : a.width), rd = b.depth / (quarter ? a.width : a.depth);
      out.require(rw >= 0.8 - 1e-9 && rw <= 1.2 + 1e-9 && rd >= 0.8 - 1e-9 && rd <= 1.2 + 1e-9,
                  tag + ": dims ratio " + std::to_string(rw) + " x " + std::to_string(rd));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "100 sets, %d wireframes, worst center shift %.2e m", objects, worst_center);
  out.detail = buf;
  return out;
}

Outcome ceiling_rule() {
  Outcome out;
  const auto& env = Env::get();
  int checked = 0;
  auto check = [&](const Room& room, const SceneObject& o, const std::string& how) {
    const auto& s = raw().at(o.spec_id);
    if (s.placement != "ceiling") return;
    ++checked;
    out.require(o.position.y == room.ceiling_height - 0.5 - s.h * o.scale, how + ": " + o.spec_id);
  };
  for (const char* name : kRooms) {
    const Room room = testsupport::room(name);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      for (const auto& o : env.gen().complete_scene(room, {}, seeded(seed)).objects) check(room, o, "completion");
      const auto wfs = env.gen().generate_wireframes(room, {}, seeded(seed)).wireframes;
      for (const auto& o : env.gen().populate_wireframes(room, wfs, seeded(seed)).objects) check(room, o, "population");
    }
    const auto [lo, hi] = room_bounds(room);
    const Vec2 mid{(lo.x + hi.x) / 2, (lo.z + hi.z) / 2};
    for (const char* cat : {"ceiling_lamp", "pendant_lamp"}) {
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        try {
          for (const auto& s : env.gen().suggest_objects(room, {}, mid, {std::string(cat), {}, {}}, seeded(seed))) {
            check(room, {"s", s.spec.spec_id, s.pose.position, s.pose.yaw, s.pose.scale}, "suggestion");
          }
        } catch (const Error&) {
        }
      }
    }
  }
  out.require(checked > 0, "no ceiling-mounted placements produced");
  out.detail = std::to_string(checked) + " ceiling placements exact";
  return out;
}

struct Fixture {
  std::string name;
  Workspace ws;
};

std::vector<Fixture> validate_fixtures() {
  const auto expected = read_json_file(testsupport::fixture_path("validate/expected.json"));
  std::vector<Fixture> out;
  for (const auto& [name, fails] : expected.items()) {
    out.push_back({name, workspace_from_json(read_json_file(testsupport::fixture_path("validate/" + name + ".json")))});
  }
  return out;
}

long overlap_violations(const ValidationReport& r) {
  return std::count_if(r.violations.begin(), r.violations.end(),
                       [](const Violation& v) { return v.kind == check_id::kOverlap; });
}

Outcome validator_oracles() {
  Outcome out;
  const auto& cat = Env::get().catalog;
  const auto fx = validate_fixtures();
  int nav_checks = 0, layouts = 0;
  for (const auto& f : fx) {
    const auto objs = f.ws.object_list();
    const auto boxes = oracle::boxes_of(objs, raw());
    const auto fps = footprints_of(objs, cat);
    for (double cell : {0.1, 0.05}) {
      DesignGoals g;
      g.grid_cell = cell;
      const bool lib = check_navigability(f.ws.room(), fps, g).passed;
      out.require(lib == oracle::flood_fill_navigable(f.ws.room(), boxes, cell),
                  f.name + ": navigability differs at " + std::to_string(cell));
      ++nav_checks;
    }
    const auto r = validate_layout(f.ws.room(), objs, cat);
    out.require(overlap_violations(r) == oracle::overlap_pairs(boxes), f.name + ": overlap count");
    ++layouts;
    if (f.name == "doorway_nightstand") out.require(!r.find(check_id::kDoorClearance)->passed, "doorway nightstand passes door_clearance");
    if (f.name == "window_wardrobe") out.require(!r.find(check_id::kWindowTop)->passed, "window wardrobe passes window_top");
  }
  out.require(nav_checks >= 20, "fewer than 10 navigability fixtures");
  bool door = false, window = false;
  for (const auto& f : fx) {
    door |= f.name == "doorway_nightstand";
    window |= f.name == "window_wardrobe";
  }
  out.require(door && window, "reference fixtures missing");

  std::mt19937_64 rng(31);
  const auto& items = cat.items();
  long overlaps = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Room room = testsupport::room(kRooms[trial % 3]);
    const auto [lo, hi] = room_bounds(room);
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uz(lo.z, hi.z);
    std::vector<SceneObject> objs;
    for (int i = 0; i < 8; ++i) {
      const auto& spec = items[rng() % items.size()];
      SceneObject o{"r" + std::to_string(i), spec.spec_id, {ux(rng), 0.0, uz(rng)}, 15.0 * static_cast<double>(rng() % 24), 1.0};
      if (raw().at(spec.spec_id).placement == "ceiling") o.position.y = room.ceiling_height - 0.5 - raw().at(spec.spec_id).h;
      objs.push_back(o);
    }
    const auto r = validate_layout(room, objs, cat);
    const int expected = oracle::overlap_pairs(oracle::boxes_of(objs, raw()));
    out.require(overlap_violations(r) == expected, "random layout " + std::to_string(trial) + ": overlap count");
    overlaps += expected;
    ++layouts;
  }
  out.detail = std::to_string(fx.size()) + " fixtures at 2 grid sizes, " + std::to_string(layouts) +
               " overlap scans (" + std::to_string(overlaps) + " overlapping pairs)";
  return out;
}

Outcome geometry_oracles() {
  Outcome out;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-3.0, 3.0), s(0.2, 2.5), yaw(0.0, 360.0);
  double worst_rect = 0.0, worst_area = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + static_cast<int>(rng() % 40);
    std::vector<Vec2> pts;
    const double sx = s(rng), sz = s(rng), t = yaw(rng) * oracle::kPi / 180.0;
    for (int k = 0; k < n; ++k) {
      const double x = u(rng) * sx, z = u(rng) * sz;
      pts.push_back({x * std::cos(t) - z * std::sin(t), x * std::sin(t) + z * std::cos(t)});
    }
    std::vector<oracle::P> ps;
    for (auto p : pts) ps.push_back(oracle::to_p(p));
    const auto r = geom::min_area_bounding_rect(pts);
    const double diff = std::abs(r.width * r.depth - oracle::sweep_min_rect_area(ps));
    worst_rect = std::max(worst_rect, diff);
    out.require(diff <= 1e-6, "cloud " + std::to_string(i) + ": area differs by " + std::to_string(diff));
  }
  std::uniform_real_distribution<double> c(-1.0, 1.0), d(0.3, 2.0);
  for (int i = 0; i < 50; ++i) {
    const Vec2 ca{c(rng), c(rng)}, cb{c(rng), c(rng)};
    const double wa = d(rng), da = d(rng), ya = yaw(rng), wb = d(rng), db = d(rng), yb = yaw(rng);
    const auto qa = geom::oriented_rect(ca, wa, da, ya), qb = geom::oriented_rect(cb, wb, db, yb);
    const double lib = geom::convex_intersection_area(qa, qb);
    const double mc = oracle::mc_intersection_area(oracle::rect_corners(oracle::to_p(ca), wa, da, ya),
                                                   oracle::rect_corners(oracle::to_p(cb), wb, db, yb), 1000000,
                                                   static_cast<std::uint64_t>(i));
    worst_area = std::max(worst_area, std::abs(lib - mc));
    out.require(std::abs(lib - mc) <= 1e-2, "pair " + std::to_string(i) + ": intersection differs");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst rect area error %.2e m2, worst intersection error %.2e m2", worst_rect, worst_area);
  out.detail = buf;
  return out;
}

Outcome protocol_replay() {
  Outcome out;
  const auto& env = Env::get();
  ServiceConfig cfg;
  cfg.rooms_dir = testsupport::data_path("rooms");
  Service svc(env.catalog, env.priors, env.synonyms, cfg);
  int ops = 0;
  auto call = [&](const std::string& method, const std::string& path, json body = nullptr) -> json {
    const Response r = svc.handle({method, path, {}, std::move(body)});
    out.require(r.status >= 200 && r.status < 300, method + " " + path + " -> " + std::to_string(r.status) + " " + r.body.dump());
    return r.body;
  };
  auto op = [&](const std::string& method, const std::string& path, json body = nullptr) {
    ++ops;
    return call(method, path, std::move(body));
  };
  const std::string sid = call("POST", "/v1/sessions", {{"template", "living_6x4"}})["session_id"];
  const std::string s = "/v1/sessions/" + sid;
  auto ws = [&](const std::string& id) { return s + "/workspaces/" + id; };

  // Manual workflow: commands, suggestions and direct edits.
  auto offered = op("POST", ws("ws-1") + "/commands",
                    {{"command", {{"text", "Generate a minimalist wooden chair here"}, {"pointer", {1.0, 1.0}}}}});
  std::string sg = offered["effect"]["pending"]["suggestion_id"];
  const std::string chair = op("POST", s + "/suggestions/" + sg + "/choose", {{"index", 0}})["new_ids"][0];
  sg = op("POST", ws("ws-1") + "/suggestions", {{"location", {4.5, 3.0}}, {"filter", {{"category", "side_table"}}}})["suggestion_id"];
  op("POST", s + "/suggestions/" + sg + "/choose", {{"index", 0}});
  const std::string sofa = op("POST", ws("ws-1") + "/objects", {{"spec_id", "sofa_01"}, {"at", {3.0, 2.0}}, {"rotation", 0}})["new_ids"][0];
  op("PATCH", ws("ws-1") + "/objects/" + sofa, {{"move", {0.1, 0.0}}});
  op("PATCH", ws("ws-1") + "/objects/" + sofa, {{"rotation", 180}});
  op("PATCH", ws("ws-1") + "/objects/" + sofa, {{"scale_factor", 1.1}});
  op("POST", ws("ws-1") + "/objects/duplicate", {{"ids", {chair}}});
  op("POST", ws("ws-1") + "/copy", {{"ids", {chair}}});
  op("POST", ws("ws-1") + "/objects/" + chair + "/regenerate");
  op("DELETE", ws("ws-1") + "/objects/" + sofa);

  // Automatic workflow in a second workspace.
  op("POST", s + "/workspaces");
  op("POST", ws("ws-2") + "/paste", {{"anchor", {1.0, 3.0}}});
  op("POST", ws("ws-2") + "/complete");
  op("POST", ws("ws-2") + "/commands", {{"command", {{"text", "fill the room"}}}});
  op("POST", ws("ws-2") + "/validate");

  // Scaffolded workflow in a third workspace.
  op("POST", s + "/workspaces");
  op("POST", ws("ws-3") + "/commands",
     {{"command", {{"text", "Mark this area as a bed"}, {"stroke", {{1.0, 1.0}, {3.0, 1.0}, {3.0, 3.0}, {1.0, 3.0}}}}}});
  op("POST", ws("ws-3") + "/wireframes", {{"stroke", {{4.0, 0.2}, {4.6, 0.2}, {4.6, 0.7}, {4.0, 0.7}}}, {"label", "nightstand"}});
  op("POST", ws("ws-3") + "/wireframes",
     {{"center", {5.0, 3.2}}, {"width", 0.5}, {"depth", 0.5}, {"rotation", 0}, {"label", "floor_lamp"}});
  op("POST", ws("ws-3") + "/wireframes/generate");
  const auto wfs = call("GET", ws("ws-3"))["wireframes"];
  json moved = wfs[0];
  moved["center"] = {moved["center"][0].get<double>() + 0.05, moved["center"][1].get<double>()};
  op("PUT", ws("ws-3") + "/wireframes/" + wfs[0]["id"].get<std::string>(), moved);
  op("DELETE", ws("ws-3") + "/wireframes/" + wfs.back()["id"].get<std::string>());
  op("POST", ws("ws-3") + "/populate");
  op("POST", ws("ws-3") + "/abstract");
  op("POST", ws("ws-3") + "/populate", {{"config", {{"seed", 5}}}});
  op("POST", ws("ws-3") + "/activate");
  const json exported = call("GET", ws("ws-3") + "/export");
  const std::string imported = op("POST", s + "/workspaces/import", {{"workspace", exported}})["ws_id"];
  op("DELETE", ws(imported));

  const auto events = call("GET", s + "/events")["events"];
  std::vector<Event> parsed;
  for (const auto& e : events) parsed.push_back(event_from_json(e));
  const auto rebuilt = replay(parsed);
  const auto listed = call("GET", s + "/workspaces")["workspaces"];
  std::set<std::string> live;
  for (const auto& w : listed) live.insert(w["ws_id"].get<std::string>());
  std::set<std::string> replayed;
  for (const auto& [id, w] : rebuilt) replayed.insert(id);
  out.require(live == replayed, "replayed workspace set differs");
  int identical = 0;
  for (const auto& id : live) {
    if (!rebuilt.count(id)) continue;
    const bool same = to_json(rebuilt.at(id)).dump() == call("GET", ws(id)).dump();
    identical += same;
    out.require(same, id + " differs after replay");
  }
  out.require(ops == 30, "scripted " + std::to_string(ops) + " operations");
  out.detail = std::to_string(ops) + " operations, " + std::to_string(events.size()) + " events, " +
               std::to_string(identical) + "/" + std::to_string(live.size()) + " workspaces byte-identical";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"generator safety", generator_safety},
      {"determinism", determinism},
      {"intent corpus", intent_corpus},
      {"suggestion contract", suggestion_contract},
      {"wireframe round-trip", wireframe_round_trip},
      {"ceiling rule", ceiling_rule},
      {"validator oracles", validator_oracles},
      {"geometry oracles", geometry_oracles},
      {"protocol replay", protocol_replay},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str());
    for (const auto& p : o.problems) std::printf("     - %s\n", p.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
