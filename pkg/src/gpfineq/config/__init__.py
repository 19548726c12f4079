from .campaign import REPORT_FORMATS, CampaignConfig
from .manager import ConfigManager

__all__ = ['CampaignConfig', 'ConfigManager', 'REPORT_FORMATS']
