#include "cogsem/io.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace cogsem {

namespace {

using json = nlohmann::json;

constexpr int kFormatVersion = 1;

[[noreturn]] void fail(std::string_view origin, const std::string& where, const std::string& what) {
  throw InputError(std::string(origin) + ": " + where + ": " + what);
}

json parse_json(std::string_view text, std::string_view origin) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("column"); p != std::string::npos)
      if (auto q = msg.find(": ", p); q != std::string::npos) msg = msg.substr(q + 2);
    throw InputError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + msg);
  }
}

// Typed access with path-qualified errors.
class Reader {
 public:
  explicit Reader(std::string_view origin) : origin_(origin) {}

  [[noreturn]] void error(const std::string& where, const std::string& what) const {
    fail(origin_, where, what);
  }

  const json& field(const json& j, const std::string& where, const char* key) const {
    if (!j.is_object()) error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) error(where, std::string("missing \"") + key + "\"");
    return *it;
  }

  const json* optional(const json& j, const char* key) const {
    auto it = j.find(key);
    return it == j.end() || it->is_null() ? nullptr : &*it;
  }

  std::string str(const json& j, const std::string& where) const {
    if (!j.is_string()) error(where, "expected a string");
    return j.get<std::string>();
  }

  std::int64_t integer(const json& j, const std::string& where) const {
    if (!j.is_number_integer()) error(where, "expected an integer");
    return j.get<std::int64_t>();
  }

  double number(const json& j, const std::string& where) const {
    if (!j.is_number()) error(where, "expected a number");
    return j.get<double>();
  }

  bool boolean(const json& j, const std::string& where) const {
    if (!j.is_boolean()) error(where, "expected true or false");
    return j.get<bool>();
  }

  const json& array(const json& j, const std::string& where) const {
    if (!j.is_array()) error(where, "expected an array");
    return j;
  }

  const json& object(const json& j, const std::string& where) const {
    if (!j.is_object()) error(where, "expected an object");
    return j;
  }

  // A string or an array of strings.
  std::vector<std::string> strings(const json& j, const std::string& where) const {
    if (j.is_string()) return {j.get<std::string>()};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(str(j[i], at(where, i)));
    return out;
  }

  ParamValue value(const json& j, const std::string& where) const {
    if (j.is_null()) return {};
    if (j.is_number_integer()) return ParamValue::integer(j.get<std::int64_t>());
    if (j.is_string()) return ParamValue::symbol(j.get<std::string>());
    if (j.is_array()) {
      IntTuple t;
      for (std::size_t i = 0; i < j.size(); ++i) t.push_back(integer(j[i], at(where, i)));
      return ParamValue::tuple(std::move(t));
    }
    error(where, "expected an integer, symbol, integer tuple or null");
  }

  SpacePoint point(const json& j, const std::string& where) const {
    SpacePoint p;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) p.push_back(integer(j[i], at(where, i)));
    return p;
  }

  Region region(const json& j, const std::string& where) const {
    Region r;
    for (std::size_t i = 0; i < array(j, where).size(); ++i) r.insert(point(j[i], at(where, i)));
    return r;
  }

  Segment segment(const json& j, const std::string& where) const {
    if (!j.is_array() || j.size() != 2) error(where, "expected [start, end]");
    auto s = integer(j[0], where), e = integer(j[1], where);
    if (s > e) error(where, "segment start after end");
    return Segment(s, e);
  }

  template <class E>
  E enumerated(const json& j, const std::string& where, std::optional<E> (*parse)(std::string_view) noexcept,
               const char* what) const {
    auto v = parse(str(j, where));
    if (!v) error(where, "unknown " + std::string(what) + " '" + j.get<std::string>() + "'");
    return *v;
  }

  void version(const json& doc) const {
    const json& v = field(doc, "document", "version");
    if (!v.is_number_integer() || v.get<int>() != kFormatVersion)
      error("version", "unsupported format version " + v.dump());
  }

  static std::string at(const std::string& where, std::size_t i) {
    return where + "[" + std::to_string(i) + "]";
  }
  static std::string at(const std::string& where, std::string_view key) {
    return where + "." + std::string(key);
  }

 private:
  std::string_view origin_;
};

std::vector<ParamDecl> decls(const Reader& r, const json& j, const std::string& where) {
  std::vector<ParamDecl> out;
  for (std::size_t i = 0; i < r.array(j, where).size(); ++i) {
    auto w = Reader::at(where, i);
    if (j[i].is_string()) {
      out.push_back({j[i].get<std::string>(), j[i].get<std::string>()});
    } else {
      auto name = r.str(r.field(j[i], w, "name"), w + ".name");
      auto dom = r.optional(j[i], "domain");
      out.push_back({name, dom ? r.str(*dom, w + ".domain") : name});
    }
  }
  return out;
}

ResolutionPower power(const Reader& r, const json& j, const std::string& where, std::string name) {
  ResolutionPower p;
  p.name = std::move(name);
  if (auto n = r.optional(j, "name")) p.name = r.str(*n, where + ".name");
  p.state = decls(r, r.field(j, where, "state"), where + ".state");
  p.resolution = decls(r, r.field(j, where, "resolution"), where + ".resolution");
  if (auto res = r.optional(j, "result")) p.result = decls(r, *res, where + ".result");
  return p;
}

std::vector<ParamValue> values(const Reader& r, const json& j, const std::string& where) {
  std::vector<ParamValue> out;
  for (std::size_t i = 0; i < r.array(j, where).size(); ++i) out.push_back(r.value(j[i], Reader::at(where, i)));
  return out;
}

Predicate predicate(const Reader& r, const json& j, const std::string& where) {
  r.object(j, where);
  auto parts = [&](const char* key) {
    std::vector<Predicate> ps;
    const json& a = r.array(j[key], where + "." + key);
    for (std::size_t i = 0; i < a.size(); ++i) ps.push_back(predicate(r, a[i], Reader::at(where + "." + key, i)));
    return ps;
  };
  if (j.contains("all")) return Predicate::all_of(parts("all"));
  if (j.contains("any")) return Predicate::any_of(parts("any"));
  if (j.contains("not")) return Predicate::negate(predicate(r, j["not"], where + ".not"));
  auto param = r.str(r.field(j, where, "param"), where + ".param");
  if (auto in = r.optional(j, "in")) return Predicate::in(param, values(r, *in, where + ".in"));
  if (auto range = r.optional(j, "range")) {
    auto seg = r.segment(*range, where + ".range");
    return Predicate::range(param, seg.start, seg.end);
  }
  r.error(where, "a predicate needs \"in\", \"range\", \"all\", \"any\" or \"not\"");
}

OperationDef operation(const Reader& r, const json& j, const std::string& where, const CognitiveModel& m) {
  auto kind = r.str(r.field(j, where, "op"), where + ".op");
  OperationDef op;
  op.name = kind;
  if (auto n = r.optional(j, "name")) op.name = r.str(*n, where + ".name");
  if (auto l = r.optional(j, "level")) op.level = r.enumerated(*l, where + ".level", parse_arg_level, "level");

  auto match = [&] {
    auto p = r.optional(j, "match");
    return p ? r.enumerated(*p, where + ".match", parse_match, "match") : Match::weak;
  };
  auto var = [&] {
    auto p = r.optional(j, "var");
    auto v = p ? r.integer(*p, where + ".var") : 1;
    if (v < 1) r.error(where + ".var", "variable positions start at 1");
    return static_cast<int>(v);
  };

  if (kind == "basic") {
    op.kind = BasicOp{match(), var()};
  } else if (kind == "quantifier") {
    QuantifierOp q;
    q.sort = r.enumerated(r.field(j, where, "sort"), where + ".sort", parse_quant_sort, "quantifier");
    q.match = match();
    q.var = var();
    if (auto t = r.optional(j, "theta")) {
      q.theta = r.number(*t, where + ".theta");
      if (!(q.theta > 0 && q.theta < 1)) r.error(where + ".theta", "threshold must lie in (0,1)");
    }
    op.kind = q;
  } else if (kind == "connective") {
    ConnectiveOp c;
    c.table = r.enumerated(r.field(j, where, "table"), where + ".table", parse_connective, "connective");
    if (auto a = r.optional(j, "associated")) {
      auto name = r.str(*a, where + ".associated");
      const Element* e = m.element(name);
      if (!e || !e->as_relation() || e->as_relation()->arity != 2)
        r.error(where + ".associated", "'" + name + "' is not a binary relation of the model");
      c.associated_relation = name;
    }
    op.kind = c;
  } else if (kind == "modal") {
    ModalOp mo;
    mo.sort = r.enumerated(r.field(j, where, "sort"), where + ".sort", parse_modal_sort, "modal");
    if (auto md = r.optional(j, "mode")) mo.mode = r.enumerated(*md, where + ".mode", parse_arg_level, "mode");
    op.kind = mo;
  } else if (kind == "context") {
    op.kind = ContextOp{predicate(r, r.field(j, where, "keep"), where + ".keep")};
  } else {
    r.error(where + ".op", "unknown operation kind '" + kind + "'");
  }
  return op;
}

// Elements may refer to each other in any order; they are built on demand.
class ElementBuilder {
 public:
  ElementBuilder(const Reader& r, const json& defs, CognitiveModel& m) : r_(r), defs_(defs), m_(m) {}

  void build_all() {
    for (const auto& [name, _] : defs_.items()) get(name, "elements");
  }

 private:
  const Element& get(const std::string& name, const std::string& from) {
    if (const Element* e = m_.element(name); e && done_.count(name)) return *e;
    if (!defs_.contains(name)) r_.error(from, "unknown element '" + name + "'");
    if (!visiting_.insert(name).second) r_.error(from, "element '" + name + "' refers to itself");
    build(name, defs_[name], "elements." + name);
    visiting_.erase(name);
    done_.insert(name);
    return *m_.element(name);
  }

  std::vector<Element> refs(const json& j, const std::string& where) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < r_.array(j, where).size(); ++i)
      out.push_back(get(r_.str(j[i], Reader::at(where, i)), where));
    return out;
  }

  ObsId observation(const json& j, const std::string& where) {
    auto name = r_.str(j, where);
    auto id = m_.observation_by_name(name);
    if (!id) r_.error(where, "unknown observation '" + name + "'");
    return *id;
  }

  void build(const std::string& name, const json& d, const std::string& where) {
    auto kind = r_.str(r_.field(d, where, "kind"), where + ".kind");
    if (kind == "composite") {
      std::vector<ObsId> ids;
      if (auto ms = r_.optional(d, "members"))
        for (std::size_t i = 0; i < r_.array(*ms, where + ".members").size(); ++i)
          ids.push_back(observation((*ms)[i], Reader::at(where + ".members", i)));
      Composite c(std::move(ids));
      if (auto u = r_.optional(d, "union"))
        for (const auto& e : refs(*u, where + ".union")) c = c.unite(observations_of(e));
      m_.add_element(name, Element::composite(std::move(c)));
    } else if (kind == "set") {
      m_.add_element(name, Element::set(refs(r_.field(d, where, "items"), where + ".items")));
    } else if (kind == "sequence") {
      m_.add_element(name, Element::sequence(refs(r_.field(d, where, "items"), where + ".items")));
    } else if (kind == "relation") {
      RelationInfo info;
      if (auto t = r_.optional(d, "truth")) {
        auto s = r_.str(*t, where + ".truth");
        if (s == "observational") info.truth = TruthKind::observational;
        else if (s == "set") info.truth = TruthKind::set;
        else if (s == "mental") info.truth = TruthKind::mental;
        else r_.error(where + ".truth", "expected observational, set or mental");
      }
      if (auto p = r_.optional(d, "product")) {
        auto s = r_.str(*p, where + ".product");
        if (s == "denotation") info.product = ProductKind::denotation;
        else if (s == "sense") info.product = ProductKind::sense;
        else if (s == "explanation") info.product = ProductKind::explanation;
        else if (s == "string") info.product = ProductKind::string;
        else r_.error(where + ".product", "expected denotation, sense, explanation or string");
      }
      if (auto k = r_.optional(d, "knowledge")) info.knowledge = r_.boolean(*k, where + ".knowledge");
      auto arity = r_.integer(r_.field(d, where, "arity"), where + ".arity");
      if (arity < 1) r_.error(where + ".arity", "arity must be positive");
      std::vector<ElementSeq> seqs;
      const json& ss = r_.array(r_.field(d, where, "sequences"), where + ".sequences");
      for (std::size_t i = 0; i < ss.size(); ++i) {
        auto w = Reader::at(where + ".sequences", i);
        auto items = refs(ss[i], w);
        if (items.size() != static_cast<std::size_t>(arity))
          r_.error(w, "sequence length differs from arity " + std::to_string(arity));
        seqs.push_back(ElementSeq{std::move(items)});
      }
      m_.add_element(name, Element::relation(static_cast<std::size_t>(arity), std::move(seqs), info));
    } else if (kind == "identity") {
      std::vector<ElementSeq> seqs;
      for (auto& e : refs(r_.field(d, where, "over"), where + ".over")) seqs.push_back(ElementSeq{{e, e}});
      m_.add_element(name, Element::relation(2, std::move(seqs), {TruthKind::set, ProductKind::denotation, false}));
    } else if (kind == "process") {
      auto world = r_.str(r_.field(d, where, "world"), where + ".world");
      auto seg = r_.segment(r_.field(d, where, "segment"), where + ".segment");
      RegionMap regions;
      if (auto one = r_.optional(d, "region")) {
        Region reg = r_.region(*one, where + ".region");
        for (TimePoint t = seg.start; t <= seg.end; ++t) regions[t] = reg;
      } else {
        const json& rs = r_.object(r_.field(d, where, "regions"), where + ".regions");
        for (const auto& [t, pts] : rs.items()) {
          TimePoint tp = 0;
          try {
            tp = std::stoll(t);
          } catch (const std::exception&) {
            r_.error(where + ".regions", "time key '" + t + "' is not an integer");
          }
          regions[tp] = r_.region(pts, where + ".regions." + t);
        }
      }
      try {
        m_.add_process(name, process_at(m_, world, seg, regions));
      } catch (const std::invalid_argument& e) {
        r_.error(where, e.what());
      }
    } else if (kind == "string") {
      m_.add_element(name, Element::string(r_.str(r_.field(d, where, "text"), where + ".text")));
    } else {
      r_.error(where + ".kind", "unknown element kind '" + kind + "'");
    }
  }

  const Reader& r_;
  const json& defs_;
  CognitiveModel& m_;
  std::set<std::string> visiting_;
  std::set<std::string> done_;
};

}  // namespace

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(p.string() + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CognitiveModel parse_model(std::string_view text, std::string_view origin) {
  Reader r(origin);
  json doc = parse_json(text, origin);
  r.object(doc, "document");
  r.version(doc);

  std::map<std::string, WorldInfo> worlds;
  if (auto ws = r.optional(doc, "worlds")) {
    for (const auto& [name, w] : r.object(*ws, "worlds").items()) {
      auto where = "worlds." + name;
      WorldInfo info;
      if (auto d = r.optional(w, "dimension")) {
        auto dim = r.integer(*d, where + ".dimension");
        if (dim < 0) r.error(where + ".dimension", "dimension must not be negative");
        info.dimension = static_cast<std::size_t>(dim);
      }
      if (auto s = r.optional(w, "subworlds")) info.subworlds = r.strings(*s, where + ".subworlds");
      worlds.emplace(name, std::move(info));
    }
  }

  std::map<std::string, ResolutionPower> powers;
  if (auto ps = r.optional(doc, "powers"))
    for (const auto& [name, p] : r.object(*ps, "powers").items())
      powers.emplace(name, power(r, p, "powers." + name, name));

  std::vector<PrimitiveObservation> records;
  std::vector<std::optional<std::string>> ids;
  const json& os = r.array(r.field(doc, "document", "observations"), "observations");
  for (std::size_t i = 0; i < os.size(); ++i) {
    auto where = Reader::at("observations", i);
    const json& o = os[i];
    PrimitiveObservation a;
    a.world.labels = r.strings(r.field(o, where, "world"), where + ".world");
    const json& ob = r.field(o, where, "observer");
    auto ow = where + ".observer";
    a.observer.labels = r.strings(r.field(ob, ow, "labels"), ow + ".labels");
    const json& pw = r.field(ob, ow, "power");
    if (pw.is_string()) {
      auto it = powers.find(pw.get<std::string>());
      if (it == powers.end()) r.error(ow + ".power", "unknown power '" + pw.get<std::string>() + "'");
      a.observer.power = it->second;
    } else {
      a.observer.power = power(r, pw, ow + ".power", "");
    }
    a.observer.state = values(r, r.field(ob, ow, "state"), ow + ".state");
    if (auto ac = r.optional(ob, "acim")) {
      auto s = r.str(*ac, ow + ".acim");
      if (s == "actual") a.observer.ac_im = AcIm::actual;
      else if (s == "imaginary") a.observer.ac_im = AcIm::imaginary;
      else r.error(ow + ".acim", "expected actual or imaginary");
    }
    a.resolution_point = values(r, r.field(o, where, "rpoint"), where + ".rpoint");
    if (auto res = r.optional(o, "result")) a.result = r.value(*res, where + ".result");
    try {
      validate(a);
    } catch (const std::invalid_argument& e) {
      r.error(where, e.what());
    }
    ids.push_back(r.optional(o, "id") ? std::optional(r.str(o["id"], where + ".id")) : std::nullopt);
    records.push_back(std::move(a));
  }

  std::vector<PrimitiveObservation> copy = records;
  CognitiveModel m;
  try {
    m = CognitiveModel(std::move(copy), std::move(worlds));
  } catch (const std::invalid_argument& e) {
    r.error("observations", e.what());
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!ids[i]) continue;
    if (!seen.insert(*ids[i]).second) r.error(Reader::at("observations", i), "duplicate id '" + *ids[i] + "'");
    m.name_observation(*m.observations().find(records[i]), *ids[i]);
  }

  if (auto es = r.optional(doc, "elements")) ElementBuilder(r, r.object(*es, "elements"), m).build_all();

  if (auto objs = r.optional(doc, "objects")) {
    for (std::size_t i = 0; i < r.array(*objs, "objects").size(); ++i) {
      auto where = Reader::at("objects", i);
      const json& o = (*objs)[i];
      ObjectDecl decl;
      decl.process = r.str(r.field(o, where, "process"), where + ".process");
      if (auto s = r.optional(o, "strict_start_end")) decl.strict_start_end = r.boolean(*s, where + ".strict_start_end");
      try {
        m.register_object(std::move(decl));
      } catch (const std::invalid_argument& e) {
        r.error(where, e.what());
      }
    }
  }
  return m;
}

Lexicon parse_lexicon(std::string_view text, const CognitiveModel& m, std::string_view origin) {
  Reader r(origin);
  json doc = parse_json(text, origin);
  r.object(doc, "document");
  r.version(doc);
  Lexicon lex;
  for (const auto& [token, list] : r.object(r.field(doc, "document", "entries"), "entries").items()) {
    auto where = "entries." + token;
    LexiconEntry entry;
    entry.surface = token;
    entry.empty_meaning = r.array(list, where).empty();
    for (std::size_t i = 0; i < list.size(); ++i) {
      auto w = Reader::at(where, i);
      const json& d = list[i];
      if (d.is_string()) {
        auto name = d.get<std::string>();
        const Element* e = m.element(name);
        if (!e) r.error(w, "unknown element '" + name + "'");
        entry.denotations.push_back({name, std::make_shared<const Element>(*e), 0});
      } else {
        OperationDef op = operation(r, d, w, m);
        auto name = op.name;
        entry.denotations.push_back({std::move(name), std::move(op), 0});
      }
    }
    lex.add(std::move(entry));
  }
  return lex;
}

Context parse_context(std::string_view text, const CognitiveModel& m, std::string_view origin) {
  Reader r(origin);
  json doc = parse_json(text, origin);
  r.object(doc, "document");
  r.version(doc);
  Context ctx;
  if (auto w = r.optional(doc, "world")) {
    ctx.selected_world = r.str(*w, "world");
    if (!m.world(*ctx.selected_world)) r.error("world", "unknown world '" + *ctx.selected_world + "'");
  }
  if (auto t = r.optional(doc, "time_window")) ctx.time_window = r.segment(*t, "time_window");
  if (auto rh = r.optional(doc, "region_hints"))
    for (const auto& [name, pts] : r.object(*rh, "region_hints").items())
      ctx.region_hints.emplace(name, r.region(pts, "region_hints." + name));
  if (auto fs = r.optional(doc, "facts")) {
    for (const auto& name : r.strings(*fs, "facts")) {
      const Element* e = m.element(name);
      if (!e) r.error("facts", "unknown element '" + name + "'");
      ctx.facts.push_back(observations_of(*e));
    }
  }
  if (auto cs = r.optional(doc, "conventions")) {
    for (const auto& [pattern, ops] : r.object(*cs, "conventions").items()) {
      auto where = "conventions." + pattern;
      std::vector<OperationDef> list;
      for (std::size_t i = 0; i < r.array(ops, where).size(); ++i)
        list.push_back(operation(r, ops[i], Reader::at(where, i), m));
      ctx.conventions.emplace(pattern, std::move(list));
    }
  }
  if (auto ds = r.optional(doc, "directives")) {
    for (const auto& [key, d] : r.object(*ds, "directives").items()) {
      auto where = "directives." + key;
      Directive dir;
      if (auto i = r.optional(d, "index")) dir.index = static_cast<int>(r.integer(*i, where + ".index"));
      if (auto n = r.optional(d, "name")) dir.name = r.str(*n, where + ".name");
      if (auto c = r.optional(d, "convention")) {
        auto v = r.integer(*c, where + ".convention");
        if (v < 0) r.error(where + ".convention", "index must not be negative");
        dir.convention = static_cast<std::size_t>(v);
      }
      if (!dir.index && !dir.name && !dir.convention)
        r.error(where, "a directive needs \"index\", \"name\" or \"convention\"");
      ctx.directives.emplace(key, std::move(dir));
    }
  }
  if (auto mm = r.optional(doc, "modal_mode"))
    ctx.modal_mode = r.enumerated(*mm, "modal_mode", parse_arg_level, "mode");
  if (auto most = r.optional(doc, "most")) {
    double v = r.number(*most, "most");
    if (!(v > 0 && v < 1)) r.error("most", "threshold must lie in (0,1)");
    ctx.most_threshold = v;
  }
  try {
    validate(ctx, m);
  } catch (const std::invalid_argument& e) {
    r.error("facts", e.what());
  }
  return ctx;
}

namespace {

DepTree tree_node(const Reader& r, const json& j, const std::string& where) {
  if (j.is_string()) return DepTree::leaf(j.get<std::string>());
  if (j.is_array()) {
    if (j.size() != 2) r.error(where, "an internal node is [modifier, head]");
    return DepTree::node(tree_node(r, j[0], where + "[0]"), tree_node(r, j[1], where + "[1]"), "default");
  }
  r.object(j, where);
  DepTree t;
  if (auto tok = r.optional(j, "token")) {
    t = DepTree::leaf(r.str(*tok, where + ".token"));
    if (auto q = r.optional(j, "quoted")) t.quoted = r.boolean(*q, where + ".quoted");
  } else {
    t = DepTree::node(tree_node(r, r.field(j, where, "mod"), where + ".mod"),
                      tree_node(r, r.field(j, where, "head"), where + ".head"), "default");
    if (auto p = r.optional(j, "pattern")) t.pattern = r.str(*p, where + ".pattern");
  }
  if (auto id = r.optional(j, "id")) t.id = r.str(*id, where + ".id");
  return t;
}

}  // namespace

DepTree parse_tree(std::string_view text, std::string_view origin) {
  Reader r(origin);
  json doc = parse_json(text, origin);
  r.object(doc, "document");
  r.version(doc);
  DepTree t = tree_node(r, r.field(doc, "document", "tree"), "tree");
  if (auto s = r.optional(doc, "sentence")) t.sentence = r.boolean(*s, "sentence");
  try {
    assign_ids(t);
  } catch (const std::invalid_argument& e) {
    r.error("tree", e.what());
  }
  return t;
}

CognitiveModel load_model(const std::filesystem::path& p) { return parse_model(read_file(p), p.string()); }
Lexicon load_lexicon(const std::filesystem::path& p, const CognitiveModel& m) {
  return parse_lexicon(read_file(p), m, p.string());
}
Context load_context(const std::filesystem::path& p, const CognitiveModel& m) {
  return parse_context(read_file(p), m, p.string());
}
DepTree load_tree(const std::filesystem::path& p) { return parse_tree(read_file(p), p.string()); }

}  // namespace cogsem
