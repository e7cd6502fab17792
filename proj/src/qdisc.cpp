#include "lfq/qdisc.hpp"

namespace lfq {

QdiscConfig QdiscConfig::parse(const std::string& s) {
  if (s == "lfq") return lfq();
  if (s == "fq-codel" || s == "fqcodel") return fq_codel();
  if (s.rfind("fifo:", 0) == 0) {
    const std::string capstr = s.substr(5);
    size_t pos = 0;
    long long cap = 0;
    try {
      cap = std::stoll(capstr, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad fifo cap: " + s);
    }
    if (pos != capstr.size() || cap < 1)
      throw std::invalid_argument("bad fifo cap: " + s);
    return fifo(cap);
  }
  throw std::invalid_argument("unknown qdisc: " + s +
                              " (expected lfq, fifo:<cap> or fq-codel)");
}

std::string QdiscConfig::name() const {
  switch (kind) {
    case QdiscKind::LfqDynamic:
      return "lfq";
    case QdiscKind::Fifo:
      return "fifo:" + std::to_string(fifo_cap);
    case QdiscKind::FqCodel:
      return "fq-codel";
  }
  return "?";
}

}  // namespace lfq
