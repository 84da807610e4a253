#include "bicubic/report.hpp"

#include <cmath>
#include <cstdio>

namespace bicubic {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

Json& Json::set(const std::string& key, Json value) {
    if (kind_ != Kind::object) throw std::logic_error("set on non-object json");
    members_.emplace_back(key, std::move(value));
    return *this;
}

Json& Json::push(Json value) {
    if (kind_ != Kind::array) throw std::logic_error("push on non-array json");
    elements_.push_back(std::move(value));
    return *this;
}

namespace {

void escape_to(const std::string& s, std::string& out) {
    out.push_back('"');
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
    out.push_back('"');
}

}  // namespace

void Json::dump_to(std::string& out) const {
    switch (kind_) {
        case Kind::null: out += "null"; break;
        case Kind::string: escape_to(str_, out); break;
        case Kind::number: out += format_double(num_); break;
        case Kind::integer: out += std::to_string(int_); break;
        case Kind::boolean: out += bool_ ? "true" : "false"; break;
        case Kind::object: {
            out.push_back('{');
            bool first = true;
            for (const auto& [k, v] : members_) {
                if (!first) out.push_back(',');
                first = false;
                escape_to(k, out);
                out.push_back(':');
                v.dump_to(out);
            }
            out.push_back('}');
            break;
        }
        case Kind::array: {
            out.push_back('[');
            bool first = true;
            for (const auto& v : elements_) {
                if (!first) out.push_back(',');
                first = false;
                v.dump_to(out);
            }
            out.push_back(']');
            break;
        }
    }
}

std::string Json::dump() const {
    std::string out;
    dump_to(out);
    return out;
}

}  // namespace bicubic
