# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import io
import itertools
import json
import math
import random
import unittest
from unittest import TestCase

import networkx as nx

from ss.flyover.__config__ import config
from ss.flyover.net import (NodeState, FlyoverVars, Configuration, Base, TestFlyID,
                            Neighborhood, MESSAGE_TYPES, Topology, Corruption, Strategy,
                            SupervisorMode, ScenarioError, extract_graph, is_weakly_connected)
from ss.flyover.protocol import DEFAULT_RULES, basic_checks
from ss.flyover.supervisor import SupervisorState
from ss.flyover.engine import (Scenario, RunMetrics, default_max_rounds, generate_topology,
                               initial_configuration, farthest_pair, inject_faults,
                               STALE_MESSAGE_TYPES, BackboneFlags, classify_structures,
                               precarious, is_legal, advised_graph, track_provenance,
                               build_backbone_configuration, step_round, Simulation,
                               distance_floor_check, build_simulation, run_scenario)

from . import SLOW
from ._fixtures import BROKEN_RULES

C_BOUND = config.getint("C_BOUND", 16)


def log2_ceil(n):
    return math.ceil(math.log2(n))


def path_configuration(n, supervisor=SupervisorMode.HONEST):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(1, n + 1))
    for u in range(1, n):
        graph.add_edges_from(((u, u + 1), (u + 1, u)))
    return initial_configuration(graph, SupervisorState(supervisor, graph.nodes))


def sorted_path_edges(n):
    return {frozenset((u, u + 1)) for u in range(1, n)}


class ScenarioTest(TestCase):

    def test_defaults(self):

        scenario = Scenario(8)
        self.assertEqual(scenario.max_rounds, default_max_rounds(8))
        self.assertEqual(scenario.supervisor_label, "honest")
        self.assertEqual(Scenario(8, supervisor=SupervisorMode.ABSENT).supervisor_label, "none")
        self.assertEqual(Scenario(8, supervisor=SupervisorMode.MALICIOUS,
                                  strategy=Strategy.WRONG_VIDS).supervisor_label, "wrong_vids")

    def test_validation(self):

        with self.assertRaises(ScenarioError):
            Scenario(0)
        with self.assertRaises(ScenarioError):
            Scenario(4, max_rounds=0)
        with self.assertRaises(ScenarioError):
            Scenario(4, supervisor=SupervisorMode.MALICIOUS)
        with self.assertRaises(ScenarioError):
            Scenario(4, strategy=Strategy.SPLIT)
        with self.assertRaises(ScenarioError):
            Scenario(4, extra_edges=-1.0)

    def test_metrics(self):

        metrics = RunMetrics(rounds_to_legal=9, advice_round=2, messages_per_round=[3, 4])
        self.assertEqual(metrics.total_messages, 7)
        self.assertEqual(metrics.rounds_after_advice, 7)
        self.assertIsNone(RunMetrics(advice_round=2).rounds_after_advice)


class TopologyTest(TestCase):

    def test_every_kind_is_weakly_connected(self):

        for kind in Topology:
            for n in (1, 2, 7, 16):
                graph = generate_topology(kind, n, random.Random(n))
                self.assertEqual(sorted(graph.nodes), list(range(1, n + 1)))
                self.assertTrue(is_weakly_connected(graph), (kind, n))
                self.assertIn("pair", graph.graph)

    def test_seeded(self):

        a = generate_topology(Topology.RANDOM_CONNECTED, 12, random.Random(3))
        b = generate_topology(Topology.RANDOM_CONNECTED, 12, random.Random(3))
        self.assertEqual(sorted(a.edges), sorted(b.edges))

    def test_far_pair(self):

        graph = generate_topology(Topology.FAR_PAIR, 16, random.Random(0))
        u, v = graph.graph["pair"]
        distance = nx.shortest_path_length(graph.to_undirected(), u, v)
        self.assertEqual(distance, 11)
        self.assertEqual(farthest_pair(nx.path_graph(4)), (0, 3))

    def test_initial_configuration(self):

        graph = nx.DiGraph([(1, 2), (3, 2)])
        config = initial_configuration(graph)
        self.assertEqual(config.nodes[1].base_mem, {2})
        self.assertEqual(config.nodes[2].base_mem, set())
        self.assertTrue(all(state.fly.is_default() for state in config.nodes.values()))

    def test_errors(self):

        with self.assertRaises(ValueError):
            generate_topology(Topology.PATH, 0, random.Random(0))


class FaultTest(TestCase):

    def setUp(self):

        graph = generate_topology(Topology.RANDOM_CONNECTED, 10, random.Random(1))
        self.config = initial_configuration(graph)

    def test_none_copies(self):

        faulty = inject_faults(self.config, Corruption.NONE, 0)
        self.assertEqual(faulty, self.config)
        self.assertIsNot(faulty, self.config)

    def test_garbage_has_a_failing_node(self):

        for seed in range(5):
            faulty = inject_faults(self.config, Corruption.GARBAGE_FLYOVER_VARS, seed)
            self.assertTrue(any(basic_checks(state.fly).exit
                                for state in faulty.nodes.values()), seed)

    def test_stale_has_a_flyid_test(self):

        for seed in range(5):
            faulty = inject_faults(self.config, Corruption.STALE_CHANNEL_MESSAGES, seed)
            self.assertTrue(any(isinstance(msg, TestFlyID) and msg.flyid is not None
                                for state in faulty.nodes.values()
                                for msg in state.channel), seed)

    def test_stale_covers_node_messages(self):

        seen = set()
        for seed in range(40):
            faulty = inject_faults(self.config, Corruption.STALE_CHANNEL_MESSAGES, seed)
            seen.update(type(msg) for state in faulty.nodes.values() for msg in state.channel)
        expected = {mtype for mtype in MESSAGE_TYPES if not mtype.from_supervisor}
        self.assertEqual(seen, expected - {Neighborhood})
        self.assertEqual(set(STALE_MESSAGE_TYPES), seen)

    def test_connectivity_preserved(self):

        for corruption, seed in itertools.product(Corruption, range(10)):
            faulty = inject_faults(self.config, corruption, seed)
            self.assertTrue(is_weakly_connected(extract_graph(faulty)), (corruption, seed))
        self.assertEqual(self.config, inject_faults(self.config, Corruption.NONE, 0))


class StepRoundTest(TestCase):

    def test_two_nodes(self):

        config = path_configuration(2, SupervisorMode.ABSENT)
        config.supervisor = None
        after = step_round(config)
        self.assertEqual(after.round, 1)
        self.assertEqual(config.round, 0)
        self.assertTrue(all(not state.channel for state in config.nodes.values()))
        channel = after.nodes[2].channel
        self.assertIn(Base(frozenset({1})), channel)
        self.assertIn(TestFlyID(None), channel)
        self.assertEqual(step_round(config), after)

    def test_unknown_recipients_are_dropped(self):

        config = Configuration({1: NodeState(1, base_mem={2, 9}), 2: NodeState(2)})
        after = step_round(config)
        self.assertEqual(set(after.nodes), {1, 2})


class SimulationTest(TestCase):

    def test_three_node_honest(self):

        run = Simulation(path_configuration(3))
        metrics = run.run(40)
        self.assertTrue(run.settled)
        self.assertEqual(metrics.advice_round, 2)
        self.assertEqual(metrics.connectivity_violations, 0)
        self.assertEqual(metrics.sybil_violations, 0)
        report = classify_structures(run.config)
        self.assertEqual(report.backbones, [(1, 3, 2)])
        self.assertEqual(report.flags[(1, 3, 2)],
                         BackboneFlags(winged=False, flyover=True, correctly_configured=True))
        self.assertTrue(is_legal(run.config))
        self.assertEqual(precarious(run.config, report), set())

    def test_pending_exit_keeps_running(self):

        ids = list(range(1, 9))
        config = build_backbone_configuration(ids, levels=8, certified=True, exit_at=5)
        run = Simulation(config)
        run.step()
        self.assertFalse(run.settled)
        metrics = run.run(32)
        self.assertTrue(run.settled)
        self.assertIsNotNone(metrics.rounds_to_all_reject)
        self.assertLessEqual(metrics.rounds_to_all_reject, 2 * int(math.log2(8)) + 2)
        self.assertFalse(any(state.dual_state for state in run.config.nodes.values()))

    def test_single_node(self):

        metrics = run_scenario(Scenario(1))
        self.assertEqual(metrics.rounds_to_legal, 0)
        self.assertEqual(metrics.rounds_to_all_reject, 0)

    def test_base_only_path(self):

        for seed in range(3):
            metrics = run_scenario(Scenario(8, Topology.PATH, SupervisorMode.ABSENT, seed=seed))
            self.assertIsNotNone(metrics.rounds_to_legal)
            self.assertLessEqual(metrics.rounds_to_legal, 8 * 8)
            self.assertIsNone(metrics.advice_round)

    def test_honest_path(self):

        scenario = Scenario(8, Topology.PATH, seed=4)
        run = build_simulation(scenario)
        metrics = run.run(scenario.max_rounds)
        self.assertTrue(run.settled)
        self.assertTrue(is_legal(run.config))
        self.assertEqual(metrics.connectivity_violations, 0)
        self.assertEqual(metrics.advice_round, 2)

    def test_trace(self):

        trace = io.StringIO()
        run = Simulation(path_configuration(3), trace=trace)
        run.step()
        lines = trace.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        entry = json.loads(lines[1])
        self.assertEqual(entry["round"], 1)
        self.assertEqual(sorted(entry["digests"]), ["1", "2", "3"])
        self.assertEqual(json.loads(run.dump().splitlines()[0])["round"], 1)


class DetectorTest(TestCase):

    def test_empty(self):

        config = Configuration({u: NodeState(u) for u in (1, 2, 3)})
        report = classify_structures(config)
        self.assertTrue(report.is_empty)
        self.assertEqual(precarious(config), set())

    def test_perfect_ring(self):

        config = Configuration({
            1: NodeState(1, FlyoverVars(1, L=[3], R=[2])),
            2: NodeState(2, FlyoverVars(2, L=[1], R=[3])),
            3: NodeState(3, FlyoverVars(3, L=[2], R=[1])),
        })
        report = classify_structures(config)
        self.assertEqual(report.ouroboroi, [(1, 2, 3)])
        self.assertEqual(report.backbones, [])
        self.assertEqual(precarious(config, report), {1, 2, 3})

    def test_stylish_ring(self):

        config = Configuration({
            1: NodeState(1, FlyoverVars(1, L=[3], R=[2])),
            2: NodeState(2, FlyoverVars(2, L=[1], R=[3])),
            3: NodeState(3, FlyoverVars(3, L=[2])),
        })
        report = classify_structures(config)
        self.assertEqual(report.ouroboroi, [(1, 2, 3)])
        self.assertEqual(report.backbones, [])

    def test_lost(self):

        config = Configuration({5: NodeState(5, FlyoverVars(5, R=[6])), 6: NodeState(6)})
        report = classify_structures(config)
        self.assertEqual(report.lost, (5,))
        self.assertEqual(sorted(report.classified()), [5])
        self.assertEqual(precarious(config, report), {5})

    def test_backbone_flags(self):

        config = build_backbone_configuration([1, 2, 3, 4], levels=3, certified=True)
        report = classify_structures(config)
        self.assertEqual(report.backbones, [(1, 2, 3, 4)])
        self.assertEqual(report.flags[(1, 2, 3, 4)],
                         BackboneFlags(winged=False, flyover=True, correctly_configured=True))
        self.assertEqual(report.summary(), {"backbones": [4], "ouroboroi": [], "lost": 0,
                                            "flyovers": 1, "correct": 1})
        self.assertEqual(precarious(config, report), set())

    def test_level_one_backbone_is_no_flyover(self):

        config = build_backbone_configuration([1, 2, 3, 4, 5])
        flags = classify_structures(config).flags[(1, 2, 3, 4, 5)]
        self.assertFalse(flags.flyover)
        self.assertFalse(flags.correctly_configured)

    def test_winged(self):

        config = build_backbone_configuration([1, 2, 3], certified=True)
        config.nodes[1].fly.L = [9]
        flags = classify_structures(config).flags[(1, 2, 3)]
        self.assertTrue(flags.winged)
        self.assertEqual(precarious(config), {1, 2, 3})

    def test_precarious(self):

        config = build_backbone_configuration([1, 2, 3], levels=2, certified=True)
        self.assertEqual(precarious(config), set())
        config.nodes[4] = NodeState(4, base_mem={3})
        self.assertEqual(precarious(config), {1, 2, 3})

        config = build_backbone_configuration([1, 2, 3], levels=2, certified=True, exit_at=2)
        self.assertEqual(precarious(config), {1, 2, 3})

    def test_is_legal(self):

        self.assertTrue(is_legal(Configuration({1: NodeState(1)})))
        self.assertFalse(is_legal(Configuration({1: NodeState(1), 2: NodeState(2)})))
        config = path_configuration(4)
        self.assertTrue(is_legal(config, c_extra=0))
        config.nodes[1].base_mem |= {3, 4}
        self.assertFalse(is_legal(config, c_extra=0))
        self.assertTrue(is_legal(config))

        full = build_backbone_configuration(range(1, 17), levels=5, certified=True)
        self.assertTrue(classify_structures(full).flags[tuple(range(1, 17))].flyover)
        self.assertTrue(is_legal(full))

    def test_seeding_errors(self):

        with self.assertRaises(ValueError):
            build_backbone_configuration([1, 1])
        with self.assertRaises(ValueError):
            build_backbone_configuration([1])
        with self.assertRaises(ValueError):
            build_backbone_configuration([1, 2], levels=0)
        with self.assertRaises(ValueError):
            build_backbone_configuration([1, 2], vids=[1])


class ConstructionScheduleTest(TestCase):
    """One shortcut level per round once the first tests are on the wire."""

    def test_schedule(self):

        for size in (4, 8, 16, 32, 64):
            rounds = int(math.log2(size - 1))
            config = build_backbone_configuration(range(1, size + 1), certified=True,
                                                  primed=True)
            chain = tuple(range(1, size + 1))
            for r in range(1, rounds + 1):
                config = step_round(config)
                self.assertEqual(len(config.nodes[1].fly.R), min(r + 1, rounds + 1), (size, r))
                self.assertEqual(len(config.nodes[size].fly.L), min(r + 1, rounds + 1),
                                 (size, r))
            flags = classify_structures(config).flags[chain]
            self.assertTrue(flags.flyover, size)
            self.assertTrue(flags.correctly_configured, size)

    def test_first_round(self):

        config = build_backbone_configuration(range(1, 6), certified=True, primed=True)
        self.assertTrue(all(state.channel for state in config.nodes.values()))
        config = step_round(config)
        self.assertEqual(config.nodes[1].fly.R, [2, 3])
        self.assertEqual(config.nodes[3].fly.L, [2, 1])
        self.assertFalse(any(state.fly.exit for state in config.nodes.values()))

    def test_unprimed_is_one_round_late(self):

        config = build_backbone_configuration(range(1, 6), certified=True)
        config = step_round(config)
        self.assertEqual(config.nodes[1].fly.R, [2])


class ExitPropagationTest(TestCase):

    def check(self, size):

        ids = list(range(1, size + 1))
        config = build_backbone_configuration(ids, levels=size, certified=True,
                                              exit_at=ids[size // 2])
        self.assertTrue(classify_structures(config).flags[tuple(ids)].flyover)
        run = Simulation(config)
        metrics = run.run(4 * size)
        bound = 2 * int(math.log2(size)) + 2
        self.assertIsNotNone(metrics.rounds_to_all_reject)
        self.assertLessEqual(metrics.rounds_to_all_reject, bound)
        self.assertTrue(all(not state.fly.in_flyover for state in run.config.nodes.values()))

    def test_small(self):

        for size in (8, 32):
            self.check(size)

    @unittest.skipUnless(SLOW, "set FLYOVER_SLOW=1 for a 128 node flyover")
    def test_large(self):

        self.check(128)


class ProvenanceTest(TestCase):

    def test_honest_and_sybil_runs_are_clean(self):

        for supervisor, strategy in ((SupervisorMode.HONEST, None),
                                     (SupervisorMode.MALICIOUS, Strategy.SYBIL)):
            run = build_simulation(Scenario(8, supervisor=supervisor, strategy=strategy,
                                            seed=2))
            run.run(60)
            self.assertEqual(track_provenance(run), 0)

    def test_broken_fixture_is_caught(self):

        scenario = Scenario(8, supervisor=SupervisorMode.MALICIOUS, strategy=Strategy.SYBIL,
                            seed=2)
        run = build_simulation(scenario, rules=BROKEN_RULES)
        run.run(20)
        self.assertGreater(track_provenance(run), 0)
        self.assertEqual(run.metrics.sybil_violations, len(run.provenance_events))
        self.assertTrue(all(event.ids for event in run.provenance_events))

    def test_requires_instrumentation(self):

        run = Simulation(path_configuration(3), check_provenance=False)
        with self.assertRaises(ValueError):
            track_provenance(run)


class DistanceFloorTest(TestCase):

    def test_far_pair(self):

        for supervisor, strategy in ((SupervisorMode.HONEST, None),
                                     (SupervisorMode.ABSENT, None),
                                     (SupervisorMode.MALICIOUS, Strategy.CYCLE)):
            scenario = Scenario(16, Topology.FAR_PAIR, supervisor, strategy, seed=1)
            run = build_simulation(scenario)
            metrics = run.run(scenario.max_rounds)
            pair = run.watch[0]
            self.assertTrue(distance_floor_check(run, pair))
            self.assertEqual(metrics.floor_violations, 0)
            initial = run.distances[pair][0]
            if metrics.rounds_to_legal is not None:
                self.assertGreaterEqual(metrics.rounds_to_legal, log2_ceil(initial))

    def test_unwatched_pair(self):

        run = Simulation(path_configuration(3))
        with self.assertRaises(ValueError):
            distance_floor_check(run, (1, 3))


class ConnectivityTest(TestCase):

    SUPERVISORS = [(SupervisorMode.HONEST, None), (SupervisorMode.ABSENT, None)] + \
                  [(SupervisorMode.MALICIOUS, strategy) for strategy in Strategy]

    def battery(self, sizes, seeds):

        for topology, (supervisor, strategy), corruption, n, seed in itertools.product(
                Topology, self.SUPERVISORS, Corruption, sizes, seeds):
            scenario = Scenario(n, topology, supervisor, strategy, seed=seed,
                                corruption=corruption)
            metrics = run_scenario(scenario)
            self.assertEqual(metrics.connectivity_violations, 0, scenario)

    def test_small(self):

        self.battery((2, 5), (0,))

    @unittest.skipUnless(SLOW, "set FLYOVER_SLOW=1 for the full connectivity battery")
    def test_battery(self):

        self.battery((2, 8, 17, 64), (0, 1))


class ConvergenceTest(TestCase):

    def check(self, n, seeds):

        for seed in seeds:
            metrics = run_scenario(Scenario(n, seed=seed))
            self.assertIsNotNone(metrics.rounds_to_legal, (n, seed))
            self.assertIsNotNone(metrics.advice_round, (n, seed))
            self.assertLessEqual(metrics.rounds_after_advice, C_BOUND * log2_ceil(n),
                                 (n, seed))

    def test_small(self):

        for n in (8, 16):
            self.check(n, range(3))

    @unittest.skipUnless(SLOW, "set FLYOVER_SLOW=1 for sizes up to 256")
    def test_scaling(self):

        averages = {}
        for n in (8, 16, 32, 64, 128, 256):
            self.check(n, range(20))
            rounds = [run_scenario(Scenario(n, seed=seed)).rounds_after_advice
                      for seed in range(20)]
            averages[n] = sum(rounds) / len(rounds)
        self.assertLessEqual(averages[256], 2.5 * max(averages[16], 1))


class MaliciousTest(TestCase):

    def check(self, n, seeds):

        bound = C_BOUND * log2_ceil(n)
        for strategy, seed in itertools.product(Strategy, seeds):
            scenario = Scenario(n, supervisor=SupervisorMode.MALICIOUS, strategy=strategy,
                                seed=seed)
            run = build_simulation(scenario)
            metrics = run.run(scenario.max_rounds)
            self.assertEqual(metrics.connectivity_violations, 0, scenario)
            self.assertEqual(metrics.sybil_violations, 0, scenario)
            nodes = run.config.nodes.values()
            if not precarious(run.config) and any(state.dual_state for state in nodes):
                # only a stale snapshot of an unchanged topology can certify a full flyover
                self.assertIs(strategy, Strategy.STALE, scenario)
            else:
                self.assertIsNotNone(metrics.rounds_to_all_reject, scenario)
                self.assertLessEqual(metrics.rounds_to_all_reject - (metrics.advice_round or 0),
                                     bound, scenario)
            self.assertIsNotNone(metrics.rounds_to_legal, scenario)

    def test_small(self):

        self.check(8, range(2))

    @unittest.skipUnless(SLOW, "set FLYOVER_SLOW=1 for sizes 32 and 128")
    def test_large(self):

        for n in (32, 128):
            self.check(n, range(20))


class CertificateTest(TestCase):
    """Certificate exchange against the sorted path over every parent assignment."""

    rules = DEFAULT_RULES.subset("BasicChecks", "RejectFlyover", "R_TestConnCertificate",
                                 "TestConnCertificate")

    def check(self, n):

        base = build_backbone_configuration(range(1, n + 1), levels=n)
        others = range(2, n + 1)
        choices = [[(par, dist) for par in range(1, n + 1) if par != u
                    for dist in range(1, n)] for u in others]
        rounds = 2 * log2_ceil(n) + 4
        accepted = 0
        for assignment in itertools.product(*choices):
            config = base.copy()
            for u, (par, dist) in zip(others, assignment):
                config.nodes[u].fly.c_par = par
                config.nodes[u].fly.c_dist = dist
            advised = set(map(frozenset, advised_graph(config).edges))
            for _ in range(rounds):
                config = step_round(config, self.rules)
            kept = all(state.fly.in_flyover and not state.fly.exit
                       for state in config.nodes.values())
            self.assertEqual(kept, advised == sorted_path_edges(n), assignment)
            if kept:
                accepted += 1
                certified = {frozenset((u, v)) for u, state in config.nodes.items()
                             for v in state.fly.c_ids}
                self.assertEqual(certified, sorted_path_edges(n), assignment)
        self.assertEqual(accepted, 1)

    def test_small(self):

        for n in (2, 3, 4):
            self.check(n)

    @unittest.skipUnless(SLOW, "set FLYOVER_SLOW=1 for five nodes")
    def test_five_nodes(self):

        self.check(5)


if __name__ == '__main__':
    unittest.main()
