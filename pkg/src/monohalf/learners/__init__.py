"""PAC, active and online learners for monophonic halfspaces."""

from .active import OracleNotRealizableError, QueryOracle, active_learn
from .online import (HalvingLearner, OnlineLearner, WeightedMajorityLearner, WinnowLearner,
                     agnostic_winnow_online, best_fixed_mistakes, halving_mistake_bound, halving_online,
                     random_stream, shadow_features, weighted_majority_online, winnow_mistake_bound,
                     winnow_online)
from .pac import (NotRealizableError, empirical_risk, erm, pac_experiment, pac_learn_realizable,
                  pac_sample_size, pac_trial)
from .transcript import LearnerTranscript
