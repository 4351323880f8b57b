# Copyright (c) 2024-2026, Flyover Developers
# Licensed under the BSD license
# http://opensource.org/licenses/BSD-3-Clause

import random
import unittest
from unittest import TestCase

import networkx as nx

from ss.flyover.net import (AdviceMessage, Advice, RequestSnapshot, Neighborhood, Strategy,
                            SupervisorMode, Phase, DisconnectedSnapshotError)
from ss.flyover.supervisor import (Snapshot, bfs_parents, sorted_path_tree, compute_advice,
                                   SupervisorState, honest_step, supervisor_step,
                                   malicious_advice, malicious_step)


def path_snapshot(n):
    return Snapshot(nx.path_graph(range(1, n + 1)))


def neighborhoods(*pairs):
    return [Neighborhood(u, frozenset(ids)) for u, ids in pairs]


ALL_ATTENTIVE = {1: True, 2: True, 3: True}
PATH3 = neighborhoods((1, {2}), (2, {1, 3}), (3, {2}))


class AdviceTest(TestCase):

    def test_three_path(self):

        advice = compute_advice(path_snapshot(3), 1)
        self.assertEqual(advice, {
            1: AdviceMessage(vID=1, c_par=None, c_dist=0, par=None, dist=0),
            2: AdviceMessage(vID=3, c_par=1, c_dist=1, par=1, dist=1),
            3: AdviceMessage(vID=2, c_par=3, c_dist=2, par=2, dist=2),
        })
        self.assertTrue(all(a.is_well_formed() for a in advice.values()))

    def test_vids_are_a_permutation(self):

        graph = nx.convert_node_labels_to_integers(nx.balanced_tree(2, 3), first_label=1)
        advice = compute_advice(Snapshot(graph), 1)
        self.assertEqual(sorted(a.vID for a in advice.values()), list(range(1, 16)))
        self.assertEqual(sum(1 for a in advice.values() if a.par is None), 1)

    def test_snapshot_from_neighborhoods(self):

        snap = Snapshot.from_neighborhoods({1: {2}, 2: {1, 3, 9}, 3: set()}, {1, 2, 3})
        self.assertEqual(snap, path_snapshot(3))
        self.assertTrue(snap.is_connected())
        self.assertEqual(snap.nodes, [1, 2, 3])

    def test_errors(self):

        graph = nx.Graph([(1, 2)])
        graph.add_node(3)
        with self.assertRaises(DisconnectedSnapshotError):
            compute_advice(Snapshot(graph), 1)
        with self.assertRaises(ValueError):
            compute_advice(path_snapshot(3), 7)
        single = nx.Graph()
        single.add_node(1)
        with self.assertRaises(ValueError):
            compute_advice(Snapshot(single), 1)

    def test_sorted_path_tree(self):

        parent, depth = sorted_path_tree([5, 1, 3], 3)
        self.assertEqual(parent, {1: 3, 5: 3})
        self.assertEqual(depth, {3: 0, 1: 1, 5: 1})

    def test_bfs_parents(self):

        graph = nx.Graph([(1, 3), (1, 2), (2, 4), (3, 4)])
        self.assertEqual(bfs_parents(graph, 1), {2: 1, 3: 1, 4: 2})


class MaliciousAdviceTest(TestCase):

    def test_split(self):

        advice = malicious_advice(Strategy.SPLIT, path_snapshot(4), random.Random(0))
        self.assertEqual({u: a.vID for u, a in advice.items()}, {1: 1, 2: 2, 3: 1, 4: 2})
        self.assertEqual({u for u, a in advice.items() if a.par is None}, {1, 3})

    def test_sybil(self):

        sends = malicious_step(Strategy.SYBIL, 1, [1, 2, 3, 4], seed=5)
        self.assertEqual([u for u, _ in sends], [1, 2, 3, 4])
        fakes = [msg.advice.par for _, msg in sends
                 if msg.advice.par is not None and msg.advice.par > 4]
        self.assertTrue(fakes)

    def test_wrong_vids(self):

        for seed in range(5):
            advice = malicious_advice(Strategy.WRONG_VIDS, path_snapshot(5), random.Random(seed))
            self.assertNotEqual(sorted(a.vID for a in advice.values()), [1, 2, 3, 4, 5])

    def test_cycle(self):

        honest = compute_advice(path_snapshot(4), 1)
        for seed in range(5):
            advice = malicious_advice(Strategy.CYCLE, path_snapshot(4), random.Random(seed))
            self.assertNotEqual(advice, honest)
            self.assertEqual({u: a.vID for u, a in advice.items()},
                             {u: a.vID for u, a in honest.items()})

    def test_partial(self):

        advice = malicious_advice(Strategy.PARTIAL, path_snapshot(4), random.Random(0),
                                  subset=[1, 3])
        self.assertEqual(sorted(advice), [1, 3])
        self.assertEqual(malicious_step(Strategy.PARTIAL, 1, [1, 2, 3], subset=[]), [])

    def test_stale(self):

        old = path_snapshot(3)
        new = Snapshot(nx.Graph([(1, 3), (3, 2)]))
        advice = malicious_advice(Strategy.STALE, new, random.Random(0), stale_snapshot=old)
        self.assertEqual(advice, compute_advice(old, 1))


class SupervisorStateTest(TestCase):

    def test_validation(self):

        with self.assertRaises(ValueError):
            SupervisorState(SupervisorMode.MALICIOUS, {1, 2})
        with self.assertRaises(ValueError):
            SupervisorState(SupervisorMode.HONEST, {1, 2}, Strategy.SPLIT)

    def test_exhausted(self):

        self.assertTrue(SupervisorState(SupervisorMode.ABSENT, {1, 2}).exhausted)
        self.assertTrue(SupervisorState(SupervisorMode.HONEST, {1}).exhausted)
        self.assertFalse(SupervisorState(SupervisorMode.HONEST, {1, 2}).exhausted)
        state = SupervisorState(SupervisorMode.MALICIOUS, {1, 2}, Strategy.SYBIL, attacks=0)
        self.assertTrue(state.exhausted)

    def test_copy(self):

        state = SupervisorState(SupervisorMode.HONEST, {1, 2})
        other = state.copy()
        self.assertEqual(other, state)
        other.inbox.append(RequestSnapshot())
        self.assertEqual(state.inbox, [])
        self.assertEqual(state.describe()["phase"], "idle")


class HonestStepTest(TestCase):

    def test_cycle_of_phases(self):

        state = SupervisorState(SupervisorMode.HONEST, {1, 2, 3})
        state, sends = honest_step(state, [], ALL_ATTENTIVE, 1)
        self.assertEqual(sends, [(1, RequestSnapshot()), (2, RequestSnapshot()),
                                 (3, RequestSnapshot())])
        self.assertIs(state.phase, Phase.COLLECTING)

        state, sends = honest_step(state, PATH3, dict.fromkeys(ALL_ATTENTIVE, False), 2)
        advice = compute_advice(path_snapshot(3), 1)
        self.assertEqual(sends, [(u, Advice(advice[u])) for u in (1, 2, 3)])
        self.assertIs(state.phase, Phase.ADVISING)
        self.assertEqual(state.advice_rounds, [2])

        state, sends = honest_step(state, [], dict.fromkeys(ALL_ATTENTIVE, False), 3)
        self.assertEqual(sends, [])
        self.assertIs(state.phase, Phase.IDLE)

    def test_waits_for_everybody(self):

        state = SupervisorState(SupervisorMode.HONEST, {1, 2, 3})
        state, sends = honest_step(state, [], {1: True, 2: False, 3: True}, 1)
        self.assertEqual(sends, [])
        self.assertIs(state.phase, Phase.WAITING)
        self.assertEqual(state.wait_counter, 1)

    def test_missing_neighborhood(self):

        state = SupervisorState(SupervisorMode.HONEST, {1, 2, 3})
        state, _ = honest_step(state, [], ALL_ATTENTIVE, 1)
        state, sends = honest_step(state, PATH3[:2], ALL_ATTENTIVE, 2)
        self.assertEqual(sends, [])
        self.assertIs(state.phase, Phase.WAITING)
        state, sends = honest_step(state, [], ALL_ATTENTIVE, 3)
        self.assertEqual(len(sends), 3)

    def test_disconnected_snapshot(self):

        state = SupervisorState(SupervisorMode.HONEST, {1, 2, 3})
        state, _ = honest_step(state, [], ALL_ATTENTIVE, 1)
        reports = neighborhoods((1, set()), (2, {3}), (3, {2}))
        with self.assertLogs("ss.flyover.supervisor._honest", "WARNING"):
            state, sends = honest_step(state, reports, ALL_ATTENTIVE, 2)
        self.assertEqual(sends, [])

    def test_absent(self):

        state = SupervisorState(SupervisorMode.ABSENT, {1, 2, 3})
        state, sends = supervisor_step(state, [], ALL_ATTENTIVE, 1)
        self.assertEqual(sends, [])


class MaliciousStepTest(TestCase):

    def test_single_attack(self):

        state = SupervisorState(SupervisorMode.MALICIOUS, {1, 2, 3}, Strategy.SYBIL, seed=1)
        state, sends = supervisor_step(state, [], ALL_ATTENTIVE, 1)
        self.assertEqual(len(sends), 3)
        state, sends = supervisor_step(state, PATH3, ALL_ATTENTIVE, 2)
        self.assertEqual(len(sends), 3)
        self.assertEqual(state.attacks_left, 0)
        state, sends = supervisor_step(state, [], ALL_ATTENTIVE, 3)
        self.assertEqual(sends, [])
        self.assertTrue(state.exhausted)

    def test_stale_waits_for_a_second_collection(self):

        state = SupervisorState(SupervisorMode.MALICIOUS, {1, 2, 3}, Strategy.STALE)
        state, _ = supervisor_step(state, [], ALL_ATTENTIVE, 1)
        state, sends = supervisor_step(state, PATH3, ALL_ATTENTIVE, 2)
        self.assertEqual(sends, [])
        self.assertEqual(state.stale_snapshot, path_snapshot(3))
        state, sends = supervisor_step(state, [], ALL_ATTENTIVE, 3)
        self.assertEqual(sends, [(u, RequestSnapshot()) for u in (1, 2, 3)])
        star = neighborhoods((1, {2, 3}), (2, {1}), (3, {1}))
        state, sends = supervisor_step(state, star, ALL_ATTENTIVE, 4)
        advice = compute_advice(path_snapshot(3), 1)
        self.assertEqual(sends, [(u, Advice(advice[u])) for u in (1, 2, 3)])


if __name__ == '__main__':
    unittest.main()
