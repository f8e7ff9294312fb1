import pytest

from nfwpt.errors import ScenarioError
from nfwpt.scenario import (FIG2_DEFAULT_RADII, ScenarioConfig,
                            fig4_default_freqs, parse_scenario)


class TestParseScenario:
    def test_minimal_fig2_defaults(self):
        config = parse_scenario("experiment = fig2\n"
                                "frequencies_ghz = 3, 10, 30\n"
                                "d_prime_m = 2, 8, 15\n")
        assert config.er_distance_m == 8.0
        assert config.array_rows == config.array_cols == 10
        assert config.element_gain_db == 13.0
        assert config.radii_m == FIG2_DEFAULT_RADII
        assert config.seed == 0

    def test_fig4_defaults(self):
        config = parse_scenario("experiment = fig4")
        assert config.er_distance_m == 3.0
        assert config.edge_length_m == 0.5
        assert config.radii_m == (0.15,)
        assert config.frequencies_ghz == fig4_default_freqs()
        assert config.frequencies_ghz[0] == 2.0
        assert config.frequencies_ghz[-1] == 30.0
        assert config.architectures == (("ris", None), ("ris", 2),
                                        ("dma", None))

    def test_empty_text(self):
        with pytest.raises(ScenarioError, match="missing experiment"):
            parse_scenario("")

    def test_negative_frequency_names_key(self):
        with pytest.raises(ScenarioError, match="frequencies_ghz"):
            parse_scenario("experiment = fig2\nfrequencies_ghz = -3\n")

    def test_out_of_band_frequency(self):
        with pytest.raises(ScenarioError, match="frequencies_ghz"):
            parse_scenario("experiment = fig4\nfrequencies_ghz = 1.0\n")

    def test_unknown_key_with_line(self):
        with pytest.raises(ScenarioError, match="line 3"):
            parse_scenario("experiment = fig2\n\nbogus_key = 1\n")

    def test_syntax_error_with_line(self):
        with pytest.raises(ScenarioError, match="line 2"):
            parse_scenario("experiment = fig2\nnot a pair\n")

    def test_duplicate_key(self):
        with pytest.raises(ScenarioError, match="duplicate"):
            parse_scenario("experiment = fig2\nseed = 1\nseed = 2\n")

    def test_comments_and_blanks(self):
        config = parse_scenario("# a comment\n\n"
                                "experiment = fig2  # trailing\n"
                                "seed = 7\n")
        assert config.seed == 7

    def test_architecture_tokens(self):
        config = parse_scenario("experiment = fig4\n"
                                "architectures = ris:inf, ris:3, dma\n")
        assert config.architectures == (("ris", None), ("ris", 3),
                                        ("dma", None))

    def test_bad_architecture(self):
        with pytest.raises(ScenarioError, match="architectures"):
            parse_scenario("experiment = fig4\narchitectures = laser\n")

    def test_bad_number(self):
        with pytest.raises(ScenarioError, match="er_distance_m"):
            parse_scenario("experiment = fig2\ner_distance_m = eight\n")

    def test_bad_experiment(self):
        with pytest.raises(ScenarioError, match="experiment"):
            parse_scenario("experiment = fig9\n")

    def test_sphere_sample_floor(self):
        with pytest.raises(ScenarioError, match="sphere_samples"):
            parse_scenario("experiment = fig2\nsphere_samples = 10\n")

    def test_hpa_efficiency_range(self):
        with pytest.raises(ScenarioError, match="hpa_efficiency"):
            parse_scenario("experiment = fig4\nhpa_efficiency = 1.5\n")

    def test_format_validation(self):
        with pytest.raises(ScenarioError, match="format"):
            parse_scenario("experiment = fig2\nformat = yaml\n")

    def test_custom_experiment_parses(self):
        config = parse_scenario("experiment = custom\n"
                                "frequencies_ghz = 5\n")
        assert config.experiment == "custom"
