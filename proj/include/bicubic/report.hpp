// Deterministic report documents: insertion-ordered JSON with floats at 15
// significant digits and exact rationals serialized as "num/den" strings.
#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bicubic/rational.hpp"

namespace bicubic {

class Json {
  public:
    Json() : kind_(Kind::null) {}
    static Json object() { Json j; j.kind_ = Kind::object; return j; }
    static Json array() { Json j; j.kind_ = Kind::array; return j; }
    static Json str(std::string s) { Json j; j.kind_ = Kind::string; j.str_ = std::move(s); return j; }
    static Json num(double v) { Json j; j.kind_ = Kind::number; j.num_ = v; return j; }
    static Json integer(i64 v) { Json j; j.kind_ = Kind::integer; j.int_ = v; return j; }
    static Json boolean(bool b) { Json j; j.kind_ = Kind::boolean; j.bool_ = b; return j; }
    static Json rational(const Rat& r) { return str(r.to_string()); }

    Json& set(const std::string& key, Json value);
    Json& push(Json value);
    std::string dump() const;  // canonical bytes, no whitespace variance

    bool is_object() const { return kind_ == Kind::object; }

  private:
    enum class Kind { null, object, array, string, number, integer, boolean };
    Kind kind_;
    std::string str_;
    double num_ = 0;
    i64 int_ = 0;
    bool bool_ = false;
    std::vector<std::pair<std::string, Json>> members_;
    std::vector<Json> elements_;

    void dump_to(std::string& out) const;
};

std::string format_double(double v);  // %.15g

}  // namespace bicubic
