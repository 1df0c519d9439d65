#include "kronlift/serialize.hpp"

#include "kronlift/error.hpp"

namespace kronlift {

namespace {

[[noreturn]] void malformed(const std::string &what) { throw Error(Errc::MalformedInput, what); }

const Json &field_of(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::size_t parse_count(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        malformed(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

} // namespace

Rational parse_rational(const Json &j) {
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string())
        malformed("rational must be a string \"p/q\" or an integer");
    const std::string s = j.get<std::string>();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        malformed("unparsable rational \"" + s + "\"");
    if (q.get_den() == 0)
        malformed("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

Json rational_to_json(const Rational &q) { return q.get_str(); }

Json integer_to_json(const Integer &z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

Integer parse_integer(const Json &j) {
    Rational q = parse_rational(j);
    if (q.get_den() != 1)
        malformed("expected an integer, got " + q.get_str());
    return q.get_num();
}

FieldPtr parse_field(const Json &j) {
    const Json &mp = field_of(j, "minpoly");
    const Json &iv = field_of(j, "root_interval");
    if (!mp.is_array() || mp.size() < 2)
        malformed("minpoly must list at least two coefficients");
    if (!iv.is_array() || iv.size() != 2)
        malformed("root_interval must be a pair");
    std::vector<Integer> c;
    for (const auto &x : mp)
        c.push_back(parse_integer(x));
    Rational lo = parse_rational(iv[0]), hi = parse_rational(iv[1]);
    if (!(lo < hi))
        malformed("root_interval must satisfy lo < hi");
    return make_field(std::move(c), lo, hi);
}

Json field_to_json(const NumberField &f) {
    Json mp = Json::array();
    for (const auto &c : f.minpoly())
        mp.push_back(integer_to_json(c));
    return {{"minpoly", mp},
            {"root_interval",
             {rational_to_json(f.root_interval().lo), rational_to_json(f.root_interval().hi)}}};
}

GroupShape parse_shape(const Json &j) {
    return {parse_count(field_of(j, "n"), "shape.n"), parse_count(field_of(j, "m"), "shape.m")};
}

Json shape_to_json(GroupShape s) { return {{"n", s.n_free}, {"m", s.m_torus}}; }

FieldElement parse_field_element(const Json &j, const FieldPtr &field) {
    if (!j.is_array() || j.size() != field->degree())
        malformed("field element must list " + std::to_string(field->degree()) +
                  " power-basis coefficients");
    std::vector<Rational> c;
    for (const auto &x : j)
        c.push_back(parse_rational(x));
    return FieldElement(field, std::move(c));
}

Json field_element_to_json(const FieldElement &x) {
    Json a = Json::array();
    for (const auto &c : x.coeffs())
        a.push_back(rational_to_json(c));
    return a;
}

GroupElement parse_element(const Json &j, GroupShape shape, const FieldPtr &field) {
    const Json &coords = field_of(j, "coords");
    if (!coords.is_array() || coords.size() != shape.dim())
        malformed("element must have " + std::to_string(shape.dim()) + " coordinates");
    std::vector<FieldElement> c;
    for (const auto &x : coords)
        c.push_back(parse_field_element(x, field));
    if (c.empty())
        return GroupElement::identity(shape, field);
    return GroupElement(shape, std::move(c));
}

Json element_to_json(const GroupElement &e) { return {{"coords", covector_to_json(e.coords())}}; }

std::vector<GroupElement> parse_elements(const Json &j, GroupShape shape, const FieldPtr &field) {
    if (!j.is_array())
        malformed("expected an array of elements");
    std::vector<GroupElement> out;
    for (const auto &x : j)
        out.push_back(parse_element(x, shape, field));
    return out;
}

Json elements_to_json(const std::vector<GroupElement> &es) {
    Json a = Json::array();
    for (const auto &e : es)
        a.push_back(element_to_json(e));
    return a;
}

Json covector_to_json(const std::vector<FieldElement> &v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(field_element_to_json(x));
    return a;
}

Json rows_to_json(const MatK &m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(covector_to_json(m.row(i)));
    return a;
}

Json matz_to_json(const MatZ &m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(integer_to_json(m(i, j)));
        a.push_back(r);
    }
    return a;
}

} // namespace kronlift
