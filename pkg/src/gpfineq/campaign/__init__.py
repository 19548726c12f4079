from .runner import Case, CampaignSummary, enumerate_cases, evaluate_cases, run_campaign, summarize_reports

__all__ = ['Case', 'CampaignSummary', 'enumerate_cases', 'evaluate_cases', 'run_campaign', 'summarize_reports']
