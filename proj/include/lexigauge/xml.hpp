#ifndef LEXIGAUGE_XML_HPP
#define LEXIGAUGE_XML_HPP

#include <string>
#include <string_view>

namespace lexigauge::xml {

inline std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace lexigauge::xml

#endif  // LEXIGAUGE_XML_HPP
