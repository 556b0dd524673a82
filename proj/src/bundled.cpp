#include "pepr/bundled.hpp"

#include <stdexcept>

namespace pepr {

namespace {

const std::vector<BenchRow> k_table2_derma_npt = {
    {"ESE-VoVNet", true, 6.5, 3.8, 20.4, 12.9, 0.7651, 0.707},
    {"ResNet-18", false, 11.7, 1.7, 17.0, 10.6, 0.748, 0.7014},
    {"ResNet-34", false, 21.8, 2.3, 23.5, 14.9, 0.7617, 0.6973},
    {"CrossVIT", true, 8.6, 2.3, 23.2, 14.5, 0.755, 0.6921},
    {"ConvNext", false, 3.7, 1.6, 18.5, 11.9, 0.7273, 0.6781},
    {"HaloNet-50", false, 22.7, 7.3, 47.7, 29.9, 0.7712, 0.6498},
};

const std::vector<BenchRow> k_table2_derma = {
    {"Ghostnet", true, 5.2, 2.0, 17.4, 11.4, 0.8579, 0.8026},
    {"ESE-VoVNet", true, 6.5, 3.8, 20.4, 12.9, 0.8634, 0.7992},
    {"FBNet", true, 5.6, 3.1, 18.5, 11.9, 0.8528, 0.795},
    {"MobileNetV2", true, 2.0, 2.2, 10.7, 7.3, 0.8251, 0.7916},
    {"MNASNet100", true, 4.4, 2.3, 15.2, 10.0, 0.8362, 0.7889},
    {"EdgeNext", true, 18.5, 4.8, 50.6, 32.6, 0.8659, 0.7221},
};

const std::vector<BenchRow> k_table2_lidc = {
    {"MNASNet100", true, 4.4, 2.4, 18.6, 11.7, 0.6732, 0.6376},
    {"ResNet-18", false, 11.7, 1.7, 20.4, 12.5, 0.6689, 0.6303},
    {"ResNet-14", false, 10.1, 2.5, 22.3, 13.7, 0.6709, 0.6289},
    {"ResNet-34", false, 21.8, 2.3, 21.7, 20.2, 0.6868, 0.6273},
    {"ResNet-26", false, 16.0, 3.4, 31.0, 19.5, 0.6818, 0.624},
    {"DPN-107", false, 86.9, 16.3, 228.0, 138.9, 0.6955, 0.4133},
};

const std::vector<BenchRow> k_table2_pneumonia = {
    {"DLA-460", false, 1.3, 2.5, 8.8, 5.8, 0.9539, 0.9053},
    {"HardcoreNAS", true, 5.3, 2.3, 8.5, 5.6, 0.9523, 0.905},
    {"MobileNetV2", true, 2.0, 2.2, 5.6, 4.0, 0.9178, 0.8874},
    {"MobileVitV2", true, 1.4, 3.1, 8.6, 5.6, 0.9293, 0.8828},
    {"SEMNASNet", true, 2.9, 2.8, 8.4, 5.5, 0.9276, 0.8821},
    {"PNASNet", false, 86.1, 22.7, 105.9, 64.8, 0.9605, 0.583},
};

const std::vector<ModelInfo> k_table3_models = {
    {"dla46x_c", 1.1, ArchClass::CNN, false},
    {"res2next50", 24.7, ArchClass::CNN, false},
    {"dla46_c", 1.3, ArchClass::CNN, false},
    {"resnext50d_32x4d", 25.0, ArchClass::CNN, false},
    {"mobilevitv2_050", 1.4, ArchClass::Other, true},
    {"res2net50_14w_8s", 25.1, ArchClass::CNN, false},
    {"mobilenetv2_050", 2.0, ArchClass::CNN, true},
    {"resnetv2_50", 25.5, ArchClass::CNN, false},
    {"semnasnet_075", 2.9, ArchClass::Other, true},
    {"resnetblur50", 25.6, ArchClass::CNN, false},
    {"pvt_v2_b0", 3.7, ArchClass::Other, true},
    {"resnetaa50", 25.6, ArchClass::CNN, false},
    {"convnext_atto", 3.7, ArchClass::CNN, false},
    {"ecaresnet50t", 25.6, ArchClass::Other, true},
    {"mnasnet_100", 4.4, ArchClass::Other, true},
    {"ecaresnet50d", 25.6, ArchClass::Other, true},
    {"spnasnet_100", 4.4, ArchClass::Other, true},
    {"gcresnet50t", 25.9, ArchClass::Other, false},
    {"ghostnet_100", 5.2, ArchClass::CNN, true},
    {"dla102x", 26.3, ArchClass::CNN, false},
    {"hardcorenas_a", 5.3, ArchClass::Other, true},
    {"xception41p", 26.9, ArchClass::CNN, false},
    {"efficientnet_b0", 5.3, ArchClass::CNN, true},
    {"xception41", 27.0, ArchClass::CNN, false},
    {"fbnetc_100", 5.6, ArchClass::CNN, true},
    {"gluon_seresnext50_32x4d", 27.6, ArchClass::CNN, false},
    {"mobilevit_s", 5.6, ArchClass::Other, true},
    {"cspdarknet53", 27.6, ArchClass::Other, true},
    {"tinynet_a", 6.2, ArchClass::CNN, true},
    {"legacy_seresnet50", 28.1, ArchClass::CNN, false},
    {"ese_vovnet19b_dw", 6.5, ArchClass::CNN, true},
    {"repvgg_a2", 28.2, ArchClass::CNN, true},
    {"densenet121", 8.0, ArchClass::CNN, false},
    {"convnext_tiny_hnf", 28.6, ArchClass::CNN, false},
    {"densenetblur121d", 8.0, ArchClass::CNN, false},
    {"densenet161", 28.7, ArchClass::CNN, false},
    {"crossvit_9_240", 8.6, ArchClass::Other, true},
    {"ecaresnetlight", 30.2, ArchClass::Other, false},
    {"fbnetv3_b", 8.6, ArchClass::CNN, true},
    {"selecsls60", 30.7, ArchClass::CNN, false},
    {"resnet14t", 10.1, ArchClass::CNN, false},
    {"gernet_l", 31.1, ArchClass::CNN, true},
    {"seresnext26ts", 10.4, ArchClass::Other, false},
    {"selecsls42b", 32.5, ArchClass::CNN, false},
    {"gcresnext26ts", 10.5, ArchClass::Other, false},
    {"selecsls60b", 32.8, ArchClass::CNN, false},
    {"eca_botnext26ts_256", 10.6, ArchClass::Other, false},
    {"dla102", 33.3, ArchClass::CNN, false},
    {"bat_resnext26ts", 10.7, ArchClass::Other, false},
    {"resnetrs50", 35.7, ArchClass::CNN, false},
    {"lambda_resnet26rpt_256", 11.0, ArchClass::Other, false},
    {"resnet51q", 35.7, ArchClass::CNN, false},
    {"resnet18d", 11.7, ArchClass::CNN, false},
    {"darknetaa53", 36.0, ArchClass::CNN, false},
    {"halonet26t", 12.5, ArchClass::Other, false},
    {"resnet61q", 36.8, ArchClass::CNN, false},
    {"botnet26t_256", 12.5, ArchClass::Other, false},
    {"dpn92", 37.7, ArchClass::CNN, false},
    {"dpn68", 12.6, ArchClass::CNN, false},
    {"xception65p", 39.8, ArchClass::CNN, false},
    {"dpn68b", 12.6, ArchClass::CNN, false},
    {"gluon_xception65", 39.9, ArchClass::CNN, false},
    {"gc_efficientnetv2_rw_t", 13.7, ArchClass::Other, true},
    {"dla102x2", 41.3, ArchClass::CNN, false},
    {"sehalonet33ts", 13.7, ArchClass::Other, false},
    {"xception71", 42.3, ArchClass::CNN, false},
    {"sebotnet33ts_256", 13.7, ArchClass::Other, false},
    {"twins_pcpvt_base", 43.8, ArchClass::Other, false},
    {"densenet169", 14.1, ArchClass::CNN, false},
    {"gluon_resnext101_32x4d", 44.2, ArchClass::CNN, false},
    {"maxvit_nano_rw_256", 15.5, ArchClass::Other, false},
    {"ecaresnet101d", 44.6, ArchClass::Other, true},
    {"gcresnext50ts", 15.7, ArchClass::Other, false},
    {"res2net101_26w_4s", 45.2, ArchClass::CNN, false},
    {"dla34", 15.7, ArchClass::CNN, false},
    {"cs3edgenet_x", 47.8, ArchClass::Other, true},
    {"ecaresnet26t", 16.0, ArchClass::Other, true},
    {"gluon_seresnext101_32x4d", 49.0, ArchClass::CNN, false},
    {"resnet26d", 16.0, ArchClass::CNN, false},
    {"cs3se_edgenet_x", 50.7, ArchClass::Other, true},
    {"maxxvit_rmlp_nano_rw_256", 16.8, ArchClass::Other, false},
    {"efficientnetv2_rw_m", 53.2, ArchClass::CNN, true},
    {"seresnext26t_32x4d", 16.8, ArchClass::Other, false},
    {"dla169", 53.4, ArchClass::CNN, false},
    {"seresnext26d_32x4d", 16.8, ArchClass::Other, false},
    {"sequencer2d_l", 54.3, ArchClass::Other, false},
    {"dla60x", 17.4, ArchClass::CNN, false},
    {"poolformer_m36", 56.2, ArchClass::Other, false},
    {"resnet32ts", 18.0, ArchClass::CNN, false},
    {"gluon_resnet152_v1b", 60.2, ArchClass::CNN, false},
    {"edgenext_base", 18.5, ArchClass::Other, true},
    {"resnet152d", 60.2, ArchClass::CNN, false},
    {"eca_resnet33ts", 19.7, ArchClass::Other, true},
    {"dpn98", 61.6, ArchClass::CNN, false},
    {"seresnet33ts", 19.8, ArchClass::Other, false},
    {"resnetrs101", 63.6, ArchClass::CNN, false},
    {"gcresnet33ts", 19.9, ArchClass::Other, false},
    {"resnet200d", 64.7, ArchClass::CNN, false},
    {"densenet201", 20.0, ArchClass::CNN, false},
    {"seresnet152d", 66.8, ArchClass::Other, false},
    {"cspresnext50", 20.6, ArchClass::CNN, false},
    {"wide_resnet50_2", 68.9, ArchClass::CNN, false},
    {"regnetv_040", 20.6, ArchClass::CNN, false},
    {"dm_nfnet_f0", 71.5, ArchClass::CNN, false},
    {"convmixer_768_32", 21.1, ArchClass::CNN, false},
    {"dpn131", 79.3, ArchClass::CNN, false},
    {"cs3darknet_focus_l", 21.2, ArchClass::CNN, false},
    {"pnasnet5large", 86.1, ArchClass::Other, false},
    {"hrnet_w18", 21.3, ArchClass::CNN, false},
    {"resnetrs152", 86.6, ArchClass::CNN, false},
    {"cspresnet50", 21.6, ArchClass::Other, true},
    {"dpn107", 86.9, ArchClass::CNN, false},
    {"gluon_resnet34_v1b", 21.8, ArchClass::CNN, false},
    {"swinv2_base_window8_256", 87.9, ArchClass::Other, false},
    {"resnet34d", 21.8, ArchClass::CNN, false},
    {"nasnetalarge", 88.8, ArchClass::Other, false},
    {"cs3sedarknet_l", 21.9, ArchClass::Other, true},
    {"resnetrs200", 93.2, ArchClass::CNN, false},
    {"dla60", 22.0, ArchClass::CNN, false},
    {"seresnext101d_32x8d", 93.6, ArchClass::Other, false},
    {"lamhalobotnet50ts_256", 22.6, ArchClass::Other, false},
    {"seresnextaa101d_32x8d", 93.6, ArchClass::Other, false},
    {"halo2botnet50ts_256", 22.6, ArchClass::Other, false},
    {"ecaresnet269d", 102.1, ArchClass::Other, true},
    {"halonet50ts", 22.7, ArchClass::Other, false},
    {"legacy_senet154", 115.1, ArchClass::CNN, false},
    {"adv_inception_v3", 23.8, ArchClass::CNN, false},
    {"resnetrs270", 129.9, ArchClass::CNN, false},
    {"gluon_inception_v3", 23.8, ArchClass::CNN, false},
    {"vgg11", 132.9, ArchClass::CNN, false},
    {"vgg13", 133.0, ArchClass::CNN, false},
};

}  // namespace

const std::vector<std::string>& bundled_names() {
  static const std::vector<std::string> names = {
      "table2_derma_npt", "table2_derma", "table2_lidc", "table2_pneumonia",
      "table3_models"};
  return names;
}

bool is_bundled(const std::string& name) {
  for (const auto& n : bundled_names())
    if (n == name) return true;
  return false;
}

const std::vector<BenchRow>& bundled_block(const std::string& name) {
  if (name == "table2_derma_npt") return k_table2_derma_npt;
  if (name == "table2_derma") return k_table2_derma;
  if (name == "table2_lidc") return k_table2_lidc;
  if (name == "table2_pneumonia") return k_table2_pneumonia;
  throw std::invalid_argument("unknown bundled block: " + name);
}

const std::vector<ModelInfo>& bundled_models() { return k_table3_models; }

std::vector<RunRecord> bundled_records(const std::string& name) {
  std::vector<RunRecord> records;
  if (name == "table3_models") {
    for (const auto& m : bundled_models()) {
      RunRecord rec;
      rec.model_id = m.name;
      rec.dataset_id = name;
      rec.performance = 0.0;
      rec.resources[ResourceKind::Params] = m.params_millions;
      rec.tags.arch_class = m.arch_class;
      rec.tags.efficient = m.efficient;
      rec.tags.params_millions = m.params_millions;
      records.push_back(std::move(rec));
    }
    return records;
  }
  for (const auto& row : bundled_block(name)) {
    RunRecord rec;
    rec.model_id = row.model;
    rec.dataset_id = name;
    rec.performance = row.test_p;
    rec.resources[ResourceKind::Memory] = row.memory_gb;
    rec.resources[ResourceKind::Energy] = row.energy_wh;
    rec.resources[ResourceKind::Time] = row.time_s;
    rec.resources[ResourceKind::Params] = row.params_millions;
    rec.tags.efficient = row.efficient;
    rec.tags.params_millions = row.params_millions;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace pepr
