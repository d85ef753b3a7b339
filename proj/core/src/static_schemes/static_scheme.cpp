#include "dynlabel/static_schemes/static_scheme.hpp"

#include "dynlabel/static_schemes/distance_labels.hpp"
#include "dynlabel/static_schemes/routing_labels.hpp"
#include "dynlabel/static_schemes/statdfs.hpp"

namespace dynlabel::static_schemes {

BitString StaticScheme::singleton_label(simnet::TreeNetwork& net, NodeId v) const {
  simnet::Subtree st;
  st.nodes.push_back(v);
  st.parent.push_back(-1);
  st.children.emplace_back();
  return mark(net, st).front();
}

std::unique_ptr<StaticScheme> make_static_scheme(functions::FunctionKind kind, SchemeOptions options) {
  switch (kind) {
    case functions::FunctionKind::Ancestry: return std::make_unique<StatDfs>(options.flip_interval);
    case functions::FunctionKind::Distance:
    case functions::FunctionKind::SeparationLevel: return std::make_unique<DistanceScheme>(kind);
    case functions::FunctionKind::Routing: return std::make_unique<RoutingScheme>();
  }
  throw ConfigError("unknown function");
}

BitString encode_label_pair(const BitString& lu, const BitString& lw) {
  BitWriter w;
  w.delimited(lu);
  w.delimited(lw);
  return std::move(w).take();
}

functions::FValue decode_label_pair(const StaticScheme& scheme, const BitString& encoded) {
  BitReader r(encoded);
  const BitString lu = r.delimited();
  const BitString lw = r.delimited();
  r.expect_end();
  return scheme.decode(lu, lw);
}

}  // namespace dynlabel::static_schemes
