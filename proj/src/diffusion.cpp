#include "frinkmetric/diffusion.hpp"

#include <json.hpp>

namespace frinkmetric {

std::string spectrum_to_json(const SpectralDecomposition<double>& decomp) {
  nlohmann::json doc;
  doc["eigenvalues"] = std::vector<double>(decomp.eigenvalues.data(),
                                           decomp.eigenvalues.data() + decomp.eigenvalues.size());
  auto vectors = nlohmann::json::array();
  for (Index l = 0; l < decomp.eigenvectors.cols(); ++l) {
    const Eigen::VectorXd col = decomp.eigenvectors.col(l);
    vectors.push_back(std::vector<double>(col.data(), col.data() + col.size()));
  }
  doc["eigenvectors"] = std::move(vectors);
  doc["convention"] = decomp.convention == LaplacianConvention::symmetric_normalized
                          ? "symmetric_normalized"
                          : "none";
  return doc.dump(2) + "\n";
}

}  // namespace frinkmetric
