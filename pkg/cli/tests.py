import csv
import filecmp
import io
import json
import tempfile
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import Client, SimpleTestCase, override_settings
from openpyxl import load_workbook

from core.exceptions import MissingDataError
from hecke.algebre import alpha_U
from hecke.satake import SatakeMonomial
from refine.classification import Refinement
from .exports import CSV_COLUMNS, csv_classification
from .options import lire_joint, lire_pentes, lire_poids, lire_profil
from .rapports import document_classification, document_info

FIXTURES = Path(__file__).resolve().parent / 'fixtures'
GL4_POIDS = '--lambda=12,1,-1,-12'


def executer(*args, **options):
    sortie = io.StringIO()
    call_command(*args, stdout=sortie, **options)
    return sortie.getvalue()


class OptionsTests(SimpleTestCase):
    def test_lire_pentes(self):
        self.assertEqual(lire_pentes('1=11, 2=0,3=1/2'), {1: 11, 2: 0, 3: 0.5})
        with self.assertRaises(MissingDataError):
            lire_pentes('1=11,2')

    def test_lire_profil(self):
        profil = lire_profil('1/2,-23/2,23/2,-1/2')
        self.assertEqual(profil.eta_val, 0)
        self.assertTrue(profil.is_pure())

    def test_lire_poids_and_joint(self):
        self.assertEqual(lire_poids('12,1,-1,-12').sw, 0)
        ((sigma, pentes),) = lire_joint(['2134:1=11,2=0,3=1'])
        self.assertEqual(str(sigma), '2134')
        self.assertEqual(pentes[3], 1)
        with self.assertRaises(MissingDataError):
            lire_joint(['2134'])


class ClassifyCommandTests(SimpleTestCase):
    def test_table_matches_fixture(self):
        with tempfile.TemporaryDirectory() as dossier:
            chemin = Path(dossier) / 'classify_n2.txt'
            chemin.write_text(executer('classify', n=2), encoding='utf-8')
            self.assertTrue(filecmp.cmp(chemin, FIXTURES / 'classify_n2.txt', shallow=False))

    def test_json_round_trip(self):
        document = json.loads(executer('classify', n=2, format='json'))
        self.assertEqual(document, document_classification(2))
        self.assertEqual(document['total'], 24)
        self.assertEqual(document['b_spin'], 8)

    def test_csv_stdout(self):
        lignes = list(csv.reader(io.StringIO(executer('classify', n=2, format='csv'))))
        self.assertEqual(lignes[0], CSV_COLUMNS)
        self.assertEqual(len(lignes), 25)
        self.assertEqual(lignes[1], ['1234', '{1,2}', 'B', '{1,2}', '3'])

    def test_csv_file(self):
        with tempfile.TemporaryDirectory() as dossier:
            chemin = Path(dossier) / 'sous' / 'strates.csv'
            sortie = executer('classify', n=2, format='csv', output=str(chemin))
            self.assertIn('Export écrit', sortie)
            self.assertEqual(chemin.read_text(encoding='utf-8'), csv_classification(document_classification(2)))

    def test_xlsx_export(self):
        with tempfile.TemporaryDirectory() as dossier:
            with override_settings(EXPORT_DIR=Path(dossier)):
                executer('classify', n=2, format='xlsx')
            classeur = load_workbook(Path(dossier) / 'stratification_n2.xlsx')
            self.assertEqual(classeur.sheetnames, ['Résumé', 'P=B', 'P=1,2,1', 'P=2,2', 'P=G'])
            feuille = classeur['P=2,2']
            self.assertEqual([c.value for c in feuille[1]], CSV_COLUMNS)
            self.assertEqual(feuille.max_row, 9)
            self.assertEqual(classeur['Résumé']['D3'].value, 0)

    def test_bound_exceeded(self):
        with self.assertRaises(CommandError) as contexte:
            executer('classify', n=6)
        self.assertEqual(contexte.exception.returncode, 2)

    def test_missing_rank(self):
        with self.assertRaises(CommandError) as contexte:
            executer('classify')
        self.assertEqual(contexte.exception.returncode, 4)


class InfoCommandTests(SimpleTestCase):
    def test_worked_example(self):
        document = json.loads(executer('info', sigma='216345', format='json'))
        self.assertEqual(document['optimal'], '1,4,1')
        self.assertEqual(document['spin_set'], [1])
        self.assertEqual(document['gamma'], [1, 4, 5])
        self.assertEqual(document['b_spin_target'], '236145')

    def test_switching(self):
        self.assertEqual(document_info(Refinement.parse('1234'))['tau'], [])
        document = json.loads(executer('info', sigma='2134', format='json'))
        self.assertEqual(
            {cle: document[cle] for cle in ('sigma', 'spin_set', 'optimal', 'gamma', 'b_spin_target', 'tau')},
            {'sigma': '2134', 'spin_set': [2], 'optimal': '2,2', 'gamma': [2, 1], 'b_spin_target': '1234', 'tau': [[1, 2]]},
        )
        self.assertNotIn('bascule', document)

    def test_alpha_u_mirror(self):
        r = Refinement.parse('216345')
        document = json.loads(executer('info', sigma='216345', format='json'))
        self.assertEqual(sorted(document['alpha_U'], key=int), [str(k) for k in range(1, 7)])
        for k in range(1, 7):
            monome = document['alpha_U'][str(k)]
            self.assertEqual(set(monome), {'half_p', 'theta', 'eta'})
            self.assertIsInstance(monome['half_p'], int)
            self.assertTrue(all(isinstance(e, int) for e in monome['theta']))
            self.assertEqual(SatakeMonomial.from_json(monome), alpha_U(r, k))
            self.assertEqual(document['alpha_U_display'][str(k)], alpha_U(r, k).format())

    def test_table(self):
        sortie = executer('info', sigma='2134')
        self.assertIn('parabolique optimal : 2,2', sortie)
        self.assertIn('par tau = (1,2)', sortie)

    def test_malformed_permutation(self):
        with self.assertRaises(CommandError) as contexte:
            executer('info', sigma='2144')
        self.assertEqual(contexte.exception.returncode, 3)


class SlopesCommandTests(SimpleTestCase):
    def test_non_critical(self):
        for sigma, pentes in (('1234', '1=11,2=0,3=11'), ('2134', '1=11,2=0,3=1')):
            sortie = executer('slopes', f'--sigma={sigma}', GL4_POIDS, f'--slopes={pentes}', '--parabolic=B')
            self.assertIn('Verdict : pente non critique', sortie)

    def test_equality_is_critical(self):
        sortie = executer('slopes', '--sigma=1234', GL4_POIDS, '--slopes=1=12,2=0,3=11')
        self.assertIn('Verdict : pente critique (indice 1)', sortie)

    def test_profile(self):
        document = json.loads(executer(
            'slopes', '--sigma=1234', GL4_POIDS, '--profile=1/2,-23/2,23/2,-1/2', '--format=json',
        ))
        self.assertEqual([ligne['pente'] for ligne in document['lignes']], ['11', '0', '11'])
        self.assertTrue(all(ligne['respectee'] for ligne in document['lignes']))
        self.assertTrue(document['non_critique'])

    def test_missing_slopes(self):
        with self.assertRaises(CommandError) as contexte:
            executer('slopes', '--sigma=1234', GL4_POIDS)
        self.assertEqual(contexte.exception.returncode, 4)

    def test_joint_certificate(self):
        document = json.loads(executer(
            'slopes', '--sigma=1234', GL4_POIDS, '--slopes=1=11,2=0,3=11', '--solve',
            '--joint=2134:1=11,2=0,3=1', '--format=json',
        ))
        attendu = json.loads((FIXTURES / 'gl4_slope_certificate.json').read_text(encoding='utf-8'))
        self.assertEqual(document['resolution'], attendu)

    def test_solve_single(self):
        sortie = executer('slopes', '--sigma=2134', GL4_POIDS, '--slopes=1=11,2=0,3=1', '--solve')
        self.assertIn('Profil compatible : t = (-23/2, 1/2, 3/2, 27/2), v_p(eta) = 2', sortie)


class ZetaCommandTests(SimpleTestCase):
    def test_support_possible(self):
        self.assertIn('Verdict : support possible', executer('zeta', parabolic='2,2'))

    def test_forced_vanishing(self):
        sortie = executer('zeta', parabolic='1,2,1', beta=2)
        self.assertIn('Verdict : annulation forcée', sortie)
        self.assertIn('nombre de blocs : impair', sortie)

    def test_non_spin(self):
        with self.assertRaises(CommandError) as contexte:
            executer('zeta', parabolic='1,3,2')
        self.assertEqual(contexte.exception.returncode, 5)


class MTauCommandTests(SimpleTestCase):
    def test_default_parabolic(self):
        sortie = executer('mtau', n=2)
        self.assertIn('Chaîne : s_3', sortie)
        self.assertIn("[12]'", sortie)
        self.assertNotIn('Normalisation', sortie)

    @override_settings(SHOW_FW_SCALE=True)
    def test_fw_scale(self):
        self.assertIn('Normalisation f_w(w) = p^2', executer('mtau', n=2, parabolic='B'))

    def test_json(self):
        document = json.loads(executer('mtau', n=2, format='json'))
        self.assertEqual(document['chaine'], [3])
        self.assertEqual(document['coefficients'], {"[12]'": '1'})
        self.assertEqual(document['facteurs_c_s'], 1)
        self.assertEqual(document['exposant_p_principal'], 0)

    def test_not_contained_in_q(self):
        with self.assertRaises(CommandError) as contexte:
            executer('mtau', n=2, parabolic='1,2,1')
        self.assertEqual(contexte.exception.returncode, 10)


class ApiTests(SimpleTestCase):
    def setUp(self):
        self.client = Client()

    def test_info(self):
        reponse = self.client.get('/api/info/2134/')
        self.assertEqual(reponse.status_code, 200)
        donnees = reponse.json()
        self.assertTrue(donnees['success'])
        self.assertEqual(donnees['raffinement']['b_spin_target'], '1234')
        self.assertEqual(donnees['raffinement']['tau'], [[1, 2]])

    def test_classify(self):
        donnees = self.client.get('/api/classify/2/').json()
        self.assertEqual(donnees['stratification']['total'], 24)

    def test_zeta(self):
        donnees = self.client.get('/api/zeta/', {'parabolic': '1,2,1'}).json()
        self.assertTrue(donnees['verdict']['annulation_forcee'])
        self.assertFalse(donnees['verdict']['entier'])
        self.assertNotIn('integral', donnees['verdict'])

    def test_errors(self):
        reponse = self.client.get('/api/info/21x4/')
        self.assertEqual(reponse.status_code, 400)
        self.assertEqual(reponse.json()['code'], 3)
        self.assertEqual(self.client.get('/api/zeta/', {'parabolic': '2,2', 'beta': 'x'}).status_code, 400)
        self.assertEqual(self.client.get('/api/zeta/').status_code, 400)
        self.assertEqual(self.client.post('/api/classify/2/').status_code, 405)
