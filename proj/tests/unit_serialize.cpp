#include <doctest.h>

#include "superbracket/serialize.hpp"
#include "support.hpp"

using namespace superbracket;
using testing::Gen;

namespace {

const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

std::string text_of(const SuperAlgebra& g, const std::map<std::string, std::string>& meta = {})
{
    return dump_canonical(to_json(g, meta));
}

std::string minimal(const std::string& extra)
{
    return R"({"field":{"kind":"rationals"},"dim_even":1,"dim_odd":1)" + extra + "}";
}

} // namespace

TEST_CASE("round trip is byte-identical")
{
    Gen gen(61);
    std::vector<SuperAlgebra> inputs{build_osp12(Q),
                                     build_osp12(F5),
                                     add_centre(build_osp12(Field::prime(7)), 2),
                                     build_double(sl2_algebra(Q), Matrix::identity(Q, 3)),
                                     build_char3_example(),
                                     build_char2_example(),
                                     sl2_algebra(Q)};
    for (int i = 0; i < 4; ++i)
        inputs.push_back(testing::random_rebase(build_osp12(Q), gen));
    for (const auto& g : inputs) {
        std::string once = text_of(g);
        AlgebraFile back = parse_algebra(once);
        CHECK(back.algebra == g);
        CHECK(text_of(back.algebra) == once);
    }
    std::map<std::string, std::string> meta{{"source", "hand"}, {"note", "x"}};
    std::string with_meta = text_of(build_osp12(Q), meta);
    AlgebraFile back = parse_algebra(with_meta);
    CHECK(back.metadata == meta);
    CHECK(text_of(back.algebra, back.metadata) == with_meta);
}

TEST_CASE("canonical scalars and ordering")
{
    Json j = to_json(build_osp12(Q));
    CHECK(j["p_map"][0] == Json::array({0, 0, 0, "2/1"}));
    CHECK(j["p_map"][1] == Json::array({0, 1, 1, "-1/1"}));
    CHECK(j["field"] == Json{{"kind", "rationals"}});
    CHECK(j["axiom_mode"] == "standard");
    CHECK_FALSE(j.contains("metadata"));
    Json k = to_json(build_osp12(F5));
    CHECK(k["p_map"][1] == Json::array({0, 1, 1, "4"}));
    std::string text = dump_canonical(j);
    CHECK(text.back() == '\n');
    CHECK(text.find("\"action\"") < text.find("\"bracket_even\""));
    CHECK(to_json(build_char2_example()).contains("squaring"));
}

TEST_CASE("hand-written input is normalised")
{
    std::string text = R"({"field":{"kind":"rationals"},"dim_even":3,"dim_odd":0,
        "bracket_even":[[0,2,1,"2/2"],[1,0,0,"-2"],[1,2,2,-2]]})";
    CHECK_THROWS_AS(parse_algebra(text), SchemaError);
    text = R"({"field":{"kind":"rationals"},"dim_even":3,"dim_odd":0,
        "bracket_even":[[0,2,1,"2/2"],[0,1,0,"-4/2"],[1,2,2,-2]]})";
    AlgebraFile f = parse_algebra(text);
    CHECK(f.algebra == sl2_algebra(Q));
}

TEST_CASE("schema errors")
{
    CHECK_THROWS_AS(parse_algebra("not json"), SchemaError);
    CHECK_THROWS_AS(parse_algebra("[]"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"extra":1)")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"dim_even":1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"reals"},"dim_even":1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"prime","p":9},"dim_even":1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"prime"},"dim_even":1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"rationals","p":5},"dim_even":1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"rationals"},"dim_even":-1,"dim_odd":1})"), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"action":[[0,0,1,"1"]])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"action":[[0,0,"1"]])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"action":[[0,0,0,1.5]])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"action":[[0,0,0,"1/0"]])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"action":[[-1,0,0,"1"]])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"p_map":{})")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"axiom_mode":"fancy")")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"squaring":[])")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"metadata":{"a":1})")), SchemaError);
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"metadata":[])")), SchemaError);
}

TEST_CASE("index order constraints")
{
    std::string twodim = R"({"field":{"kind":"rationals"},"dim_even":1,"dim_odd":2,"p_map":[[1,0,0,"1"]]})";
    CHECK_THROWS_AS(parse_algebra(twodim), SchemaError);
    std::string diag = R"({"field":{"kind":"rationals"},"dim_even":2,"dim_odd":0,"bracket_even":[[1,1,0,"1"]]})";
    CHECK_THROWS_AS(parse_algebra(diag), SchemaError);
}

TEST_CASE("mode and characteristic clash")
{
    CHECK_THROWS_AS(parse_algebra(minimal(R"(,"axiom_mode":"char3")")), ModeError);
    std::string f3 = R"({"field":{"kind":"prime","p":3},"dim_even":1,"dim_odd":1,"axiom_mode":"standard"})";
    CHECK_THROWS_AS(parse_algebra(f3), ModeError);
    std::string f2 = R"({"field":{"kind":"prime","p":2},"dim_even":1,"dim_odd":1,"axiom_mode":"char2","p_map":[]})";
    CHECK_THROWS_AS(parse_algebra(f2), SchemaError);
}

TEST_CASE("result documents")
{
    auto r = classify(add_centre(build_osp12(Q), 1));
    Json j = classification_to_json(r);
    CHECK(j["case"] == "C");
    CHECK(j["centre_dim"] == 1);
    CHECK(j["certificate"]["even"].size() == 3);
    CHECK(j["certificate"]["odd"].size() == 3);
    CHECK_FALSE(j.contains("restricted_corollary_applies"));

    Json a = classification_to_json(classify(build_char3_example()));
    CHECK(a["case"] == "not_applicable");
    CHECK(a["reason"].is_string());
    CHECK_FALSE(a.contains("certificate"));

    auto space = p_solution_space(sl2_algebra(F5), testing::irrep(1, F5));
    Json p = p_space_to_json(space);
    CHECK(p["dim"] == 1);
    CHECK(p["basis"].size() == 1);
    CHECK(p["basis"][0].size() == 3);

    Json ok = report_to_json(validate(build_osp12(Q)));
    CHECK(ok == Json{{"ok", true}, {"violations", Json::array()}});

    CHECK(field_from_json(field_to_json(F5)) == F5);
    CHECK(field_from_json(field_to_json(Q)) == Q);
    CHECK(matrix_to_json(Matrix::identity(F5, 2)) == Json::array({Json::array({"1", "0"}), Json::array({"0", "1"})}));
}
