import json

from django.core.management.base import BaseCommand, CommandError
from django.http import JsonResponse
from django.test import RequestFactory, SimpleTestCase

from .decorators import commande_raffinement, reponse_json_raffinement
from .exceptions import (
    AlreadyBSpinError, BoundExceededError, MalformedPermutationError, NotContainedInQError,
    RefinementError, SwitchingError, WeightError,
)


class CommandeEchec(BaseCommand):
    @commande_raffinement
    def handle(self, *args, **options):
        raise AlreadyBSpinError()


class CommandeOk(BaseCommand):
    @commande_raffinement
    def handle(self, *args, **options):
        return 'ok'


@reponse_json_raffinement
def vue_poids(request):
    raise WeightError("Le poids (1, 0) n'est pas pur")


@reponse_json_raffinement
def vue_ok(request):
    return JsonResponse({'success': True})


class ExceptionsTests(SimpleTestCase):
    def test_default_message(self):
        self.assertEqual(str(BoundExceededError()), "Borne d'énumération dépassée")
        self.assertEqual(str(RefinementError("autre")), "autre")

    def test_exit_codes(self):
        self.assertEqual(RefinementError.exit_code, 1)
        self.assertEqual(BoundExceededError.exit_code, 2)
        self.assertEqual(MalformedPermutationError.exit_code, 3)
        self.assertEqual(WeightError.exit_code, 6)
        # les sous-classes héritent du code de leur famille
        self.assertEqual(AlreadyBSpinError.exit_code, SwitchingError.exit_code)
        self.assertEqual(NotContainedInQError.exit_code, 10)

    def test_position_in_message(self):
        erreur = MalformedPermutationError("Valeur 5 hors de 1..4", position=3)
        self.assertEqual(erreur.position, 3)
        self.assertEqual(str(erreur), "Valeur 5 hors de 1..4 (position 3)")
        self.assertIsInstance(erreur, ValueError)


class DecoratorsTests(SimpleTestCase):
    def test_command_error_carries_exit_code(self):
        with self.assertRaises(CommandError) as contexte:
            CommandeEchec().handle()
        self.assertEqual(contexte.exception.returncode, 7)
        self.assertIn("déjà B-spin", str(contexte.exception))

    def test_command_passthrough(self):
        self.assertEqual(CommandeOk().handle(), 'ok')

    def test_json_error_response(self):
        response = vue_poids(RequestFactory().get('/'))
        self.assertEqual(response.status_code, 400)
        donnees = json.loads(response.content)
        self.assertFalse(donnees['success'])
        self.assertEqual(donnees['code'], 6)
        self.assertIn("pas pur", donnees['error'])

    def test_json_passthrough(self):
        response = vue_ok(RequestFactory().get('/'))
        self.assertEqual(response.status_code, 200)
