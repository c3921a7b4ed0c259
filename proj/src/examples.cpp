#include "khcurves/examples.hpp"

#include <stdexcept>

namespace khc {

namespace {

// Complexes are the outputs of compile() for the named family; a test keeps
// them in sync.
const std::vector<Example> kExamples = {
    {"a0", ExampleKind::Complex, "horizontal arc, slope 0",
     R"json({"differential":[],"generators":[{"h":0,"id":"x1","q":0,"vertex":"b"}]})json"},
    {"a-inf", ExampleKind::Complex, "vertical arc, slope inf",
     R"json({"differential":[],"generators":[{"h":0,"id":"x1","q":0,"vertex":"c"}]})json"},
    {"e1", ExampleKind::Complex, "figure-eight curve e_1",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1},{"kind":"S","power":2}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":0,"vertex":"b"},{"h":0,"id":"x2","q":2,"vertex":"b"}]})json"},
    {"e2", ExampleKind::Complex, "figure-eight curve e_2",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":2},{"kind":"S","power":4}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":0,"vertex":"b"},{"h":0,"id":"x2","q":4,"vertex":"b"}]})json"},
    {"e3", ExampleKind::Complex, "figure-eight curve e_3",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":3},{"kind":"S","power":6}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":0,"vertex":"b"},{"h":0,"id":"x2","q":6,"vertex":"b"}]})json"},
    {"r1-0", ExampleKind::Complex, "rational curve r_1(0)",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1},{"kind":"S","power":2}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":-1,"vertex":"b"},{"h":0,"id":"x2","q":1,"vertex":"b"}]})json"},
    {"r1-inf", ExampleKind::Complex, "rational curve r_1(inf)",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1},{"kind":"S","power":2}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":-1,"vertex":"c"},{"h":0,"id":"x2","q":1,"vertex":"c"}]})json"},
    {"alpha-plus", ExampleKind::Complex, "arc of slope +2",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":-5,"vertex":"c"},{"h":-1,"id":"x2","q":-3,"vertex":"c"},{"h":0,"id":"x3","q":-2,"vertex":"b"}]})json"},
    {"alpha-minus", ExampleKind::Complex, "arc of slope -2",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":-4,"vertex":"b"},{"h":-1,"id":"x2","q":-3,"vertex":"c"},{"h":0,"id":"x3","q":-1,"vertex":"c"}]})json"},
    {"alpha-plus-n1", ExampleKind::Complex, "arc of slope 1/1",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":-2,"vertex":"c"},{"h":0,"id":"x2","q":-1,"vertex":"b"}]})json"},
    {"alpha-plus-n2", ExampleKind::Complex, "arc of slope 1/2",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":-4,"vertex":"c"},{"h":-1,"id":"x2","q":-3,"vertex":"b"},{"h":0,"id":"x3","q":-1,"vertex":"b"}]})json"},
    {"alpha-plus-n3", ExampleKind::Complex, "arc of slope 1/3",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":2}],"to":"x4"}],"generators":[{"h":-3,"id":"x1","q":-6,"vertex":"c"},{"h":-2,"id":"x2","q":-5,"vertex":"b"},{"h":-1,"id":"x3","q":-3,"vertex":"b"},{"h":0,"id":"x4","q":-1,"vertex":"b"}]})json"},
    {"alpha-plus-n4", ExampleKind::Complex, "arc of slope 1/4",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":2}],"to":"x4"},{"from":"x4","label":[{"kind":"D","power":1}],"to":"x5"}],"generators":[{"h":-4,"id":"x1","q":-8,"vertex":"c"},{"h":-3,"id":"x2","q":-7,"vertex":"b"},{"h":-2,"id":"x3","q":-5,"vertex":"b"},{"h":-1,"id":"x4","q":-3,"vertex":"b"},{"h":0,"id":"x5","q":-1,"vertex":"b"}]})json"},
    {"alpha-minus-n1", ExampleKind::Complex, "arc of slope -1/1",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"}],"generators":[{"h":-1,"id":"x1","q":1,"vertex":"b"},{"h":0,"id":"x2","q":2,"vertex":"c"}]})json"},
    {"alpha-minus-n2", ExampleKind::Complex, "arc of slope -1/2",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":1,"vertex":"b"},{"h":-1,"id":"x2","q":3,"vertex":"b"},{"h":0,"id":"x3","q":4,"vertex":"c"}]})json"},
    {"alpha-minus-n3", ExampleKind::Complex, "arc of slope -1/3",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":2}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":1}],"to":"x4"}],"generators":[{"h":-3,"id":"x1","q":1,"vertex":"b"},{"h":-2,"id":"x2","q":3,"vertex":"b"},{"h":-1,"id":"x3","q":5,"vertex":"b"},{"h":0,"id":"x4","q":6,"vertex":"c"}]})json"},
    {"alpha-minus-n4", ExampleKind::Complex, "arc of slope -1/4",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":2}],"to":"x3"},{"from":"x3","label":[{"kind":"D","power":1}],"to":"x4"},{"from":"x4","label":[{"kind":"S","power":1}],"to":"x5"}],"generators":[{"h":-4,"id":"x1","q":1,"vertex":"b"},{"h":-3,"id":"x2","q":3,"vertex":"b"},{"h":-2,"id":"x3","q":5,"vertex":"b"},{"h":-1,"id":"x4","q":7,"vertex":"b"},{"h":0,"id":"x5","q":8,"vertex":"c"}]})json"},
    {"alpha-half-n-3", ExampleKind::Complex, "arc of slope -1/6 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":2}],"to":"x3"},{"from":"x3","label":[{"kind":"D","power":1}],"to":"x4"},{"from":"x4","label":[{"kind":"S","power":2}],"to":"x5"},{"from":"x5","label":[{"kind":"D","power":1}],"to":"x6"},{"from":"x6","label":[{"kind":"S","power":1}],"to":"x7"}],"generators":[{"h":-6,"id":"x1","q":1,"vertex":"b"},{"h":-5,"id":"x2","q":3,"vertex":"b"},{"h":-4,"id":"x3","q":5,"vertex":"b"},{"h":-3,"id":"x4","q":7,"vertex":"b"},{"h":-2,"id":"x5","q":9,"vertex":"b"},{"h":-1,"id":"x6","q":11,"vertex":"b"},{"h":0,"id":"x7","q":12,"vertex":"c"}]})json"},
    {"alpha-half-n-2", ExampleKind::Complex, "arc of slope -1/4 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":2}],"to":"x3"},{"from":"x3","label":[{"kind":"D","power":1}],"to":"x4"},{"from":"x4","label":[{"kind":"S","power":1}],"to":"x5"}],"generators":[{"h":-4,"id":"x1","q":1,"vertex":"b"},{"h":-3,"id":"x2","q":3,"vertex":"b"},{"h":-2,"id":"x3","q":5,"vertex":"b"},{"h":-1,"id":"x4","q":7,"vertex":"b"},{"h":0,"id":"x5","q":8,"vertex":"c"}]})json"},
    {"alpha-half-n-1", ExampleKind::Complex, "arc of slope -1/2 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"D","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"S","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":1,"vertex":"b"},{"h":-1,"id":"x2","q":3,"vertex":"b"},{"h":0,"id":"x3","q":4,"vertex":"c"}]})json"},
    {"alpha-half-n0", ExampleKind::Complex, "arc of slope 1/0 from the T(1/2n) family",
     R"json({"differential":[],"generators":[{"h":0,"id":"x1","q":0,"vertex":"c"}]})json"},
    {"alpha-half-n1", ExampleKind::Complex, "arc of slope 1/2 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"}],"generators":[{"h":-2,"id":"x1","q":-4,"vertex":"c"},{"h":-1,"id":"x2","q":-3,"vertex":"b"},{"h":0,"id":"x3","q":-1,"vertex":"b"}]})json"},
    {"alpha-half-n2", ExampleKind::Complex, "arc of slope 1/4 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":2}],"to":"x4"},{"from":"x4","label":[{"kind":"D","power":1}],"to":"x5"}],"generators":[{"h":-4,"id":"x1","q":-8,"vertex":"c"},{"h":-3,"id":"x2","q":-7,"vertex":"b"},{"h":-2,"id":"x3","q":-5,"vertex":"b"},{"h":-1,"id":"x4","q":-3,"vertex":"b"},{"h":0,"id":"x5","q":-1,"vertex":"b"}]})json"},
    {"alpha-half-n3", ExampleKind::Complex, "arc of slope 1/6 from the T(1/2n) family",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":2}],"to":"x4"},{"from":"x4","label":[{"kind":"D","power":1}],"to":"x5"},{"from":"x5","label":[{"kind":"S","power":2}],"to":"x6"},{"from":"x6","label":[{"kind":"D","power":1}],"to":"x7"}],"generators":[{"h":-6,"id":"x1","q":-12,"vertex":"c"},{"h":-5,"id":"x2","q":-11,"vertex":"b"},{"h":-4,"id":"x3","q":-9,"vertex":"b"},{"h":-3,"id":"x4","q":-7,"vertex":"b"},{"h":-2,"id":"x5","q":-5,"vertex":"b"},{"h":-1,"id":"x6","q":-3,"vertex":"b"},{"h":0,"id":"x7","q":-1,"vertex":"b"}]})json"},
    {"bn-q13", ExampleKind::Complex, "reduced invariant of the 1/3 rational tangle",
     R"json({"differential":[{"from":"x1","label":[{"kind":"S","power":1}],"to":"x2"},{"from":"x2","label":[{"kind":"D","power":1}],"to":"x3"},{"from":"x3","label":[{"kind":"S","power":2}],"to":"x4"}],"generators":[{"h":-3,"id":"x1","q":-6,"vertex":"c"},{"h":-2,"id":"x2","q":-5,"vertex":"b"},{"h":-1,"id":"x3","q":-3,"vertex":"b"},{"h":0,"id":"x4","q":-1,"vertex":"b"}]})json"},
    {"p23", ExampleKind::Multicurve, "pretzel tangle P(2,-3): s_4(0) and r_1(1/2)",
     R"json({"components":[{"kind":"special","slope":"0","length":4},{"kind":"rational","slope":"1/2","length":1}]})json"},
    {"demo-inf-0", ExampleKind::Multicurve, "special s_2(inf) with r_1(0)",
     R"json({"components":[{"kind":"special","slope":"inf","length":2},{"kind":"rational","slope":"0","length":1}]})json"},
    {"demo-0-0", ExampleKind::Multicurve, "special s_2(0) with r_1(0)",
     R"json({"components":[{"kind":"special","slope":"0","length":2},{"kind":"rational","slope":"0","length":1}]})json"},
    {"trivial-0", ExampleKind::Multicurve, "two-component trivial tangle, r_1(0)",
     R"json({"components":[{"kind":"rational","slope":"0","length":1}]})json"},
};

}  // namespace

const std::vector<Example>& examples() { return kExamples; }

const Example& find_example(const std::string& name) {
  for (const auto& e : kExamples)
    if (e.name == name) return e;
  throw std::out_of_range("unknown example '" + name + "'");
}

}  // namespace khc
